#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
会话日志记录模块
记录每次运行中的恢复/验证操作摘要，并在会话结束时输出汇总日志（stderr，不影响 stdout 产物）
"""
from __future__ import annotations

import sys
from datetime import datetime

from colorama import AnsiToWin32, Fore, Style

from app import config as _cfg
from shared.format_helpers import create_progress_bar


class SessionLogger:
    """会话日志管理器，记录本次运行中所有试验的汇总信息"""

    def __init__(self, stream=None):
        self.session_start = datetime.now()
        # 只包装 stderr：stdout 产物必须保持逐字节一致
        raw = stream if stream is not None else sys.stderr
        self.stream = AnsiToWin32(raw, strip=None if _cfg.ENABLE_COLOR else True).stream
        # 每条记录格式: {'type': 'trial'|'recover', 'label': str, 'ok': bool, 'detail': str}
        self.records: list[dict] = []

    def _emit(self, text: str) -> None:
        print(text, file=self.stream)

    def log_trial(self, *, r: int, n: int, k: int, seed: int, oracle_agrees: bool, theorem_holds: bool):
        """
        记录一次语料验证试验

        Args:
            r, n: 图 K_r^n 的参数
            k: 从独裁集中删除的顶点数
            seed: 随机种子
            oracle_agrees: 恢复结果是否与穷举 oracle 一致
            theorem_holds: 对称差是否满足 40ε/r 上界
        """
        ok = oracle_agrees and theorem_holds
        detail = "oracle 一致" if oracle_agrees else "oracle 不一致"
        if not theorem_holds:
            detail += "，超出 40ε/r 上界"
        self.records.append({
            "type": "trial",
            "label": f"K_{r}^{n} k={k} seed={seed}",
            "ok": ok,
            "detail": detail,
        })

    def log_recover(self, *, label: str, dictator: tuple[int, int], symdiff: str, ok: bool):
        """记录一次单集合恢复"""
        self.records.append({
            "type": "recover",
            "label": label,
            "ok": ok,
            "detail": f"dictator x_{dictator[0]}={dictator[1]}，对称差 {symdiff}",
        })

    # --- 全局统一管控的带色彩日志打印函数 ---
    def print_info(self, msg: str):
        self._emit(f"{Fore.CYAN}ℹ️  {msg}{Style.RESET_ALL}")

    def print_success(self, msg: str):
        self._emit(f"{Fore.GREEN}✅ {msg}{Style.RESET_ALL}")

    def print_warning(self, msg: str):
        self._emit(f"{Fore.YELLOW}⚠️  {msg}{Style.RESET_ALL}")

    def print_error(self, msg: str):
        self._emit(f"{Fore.RED}❌ {msg}{Style.RESET_ALL}")

    @property
    def failures(self) -> list[dict]:
        return [rec for rec in self.records if not rec["ok"]]

    def print_summary(self, *, max_failures: int = 10):
        """在控制台输出本次会话的汇总日志"""
        if not self.records:
            return

        duration = (datetime.now() - self.session_start).total_seconds()
        passed = len(self.records) - len(self.failures)

        self._emit(f"\n{Fore.CYAN}{'=' * 60}{Style.RESET_ALL}")
        self._emit(f"{Fore.GREEN}{Style.BRIGHT}{'本次会话运行汇总':^56}{Style.RESET_ALL}")
        self._emit(f"{Fore.CYAN}{'=' * 60}{Style.RESET_ALL}")
        self._emit(f"  {Fore.YELLOW}总耗时:{Style.RESET_ALL} {duration:.1f} 秒")
        self._emit(f"  {Fore.BLUE}总共执行:{Style.RESET_ALL} {len(self.records)} 项")
        color = Fore.GREEN if passed == len(self.records) else Fore.YELLOW
        bar = create_progress_bar(100.0 * passed / len(self.records), length=20)
        self._emit(f"  {color}通过: {passed}/{len(self.records)} {bar}{Style.RESET_ALL}")

        for idx, rec in enumerate(self.failures[:max_failures], 1):
            self._emit(f"  [{idx:02d}] {Fore.RED}{rec['label']}{Style.RESET_ALL}  {rec['detail']}")
        hidden = len(self.failures) - max_failures
        if hidden > 0:
            self._emit(f"  ... 另有 {hidden} 项未显示")
        self._emit(f"{Fore.CYAN}{'=' * 60}{Style.RESET_ALL}")
