"""应用共享常量：命令名、退出码与启动文案。"""
from __future__ import annotations


APP_TITLE = "DICTATORLAB - K_r^n 独立集稳定性实验台"
APP_FEATURES = "支持 Z_r^n 傅里叶分析、独裁集恢复、语料验证、Bennett 尾界"
APP_STARTUP = "正在执行命令..."

CMD_SPECTRUM = "spectrum"
CMD_RECOVER = "recover"
CMD_VERIFY = "verify"
CMD_ENUMERATE = "enumerate"
CMD_CORPUS = "corpus"
CMD_BENNETT = "bennett"
COMMANDS = (CMD_SPECTRUM, CMD_RECOVER, CMD_VERIFY, CMD_ENUMERATE, CMD_CORPUS, CMD_BENNETT)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2

CORPUS_PERTURB = "perturb"
CORPUS_ENUMERATE = "enumerate"
CORPUS_SOURCES = (CORPUS_PERTURB, CORPUS_ENUMERATE)

ENUM_METHODS = ("auto", "subsets", "branch")

# default k range for the perturbation corpus: 0..ceil(K_FRACTION * r^(n-1))
K_FRACTION = 0.2
