"""Variance-optimal hedging in lognormal SABR and rough Bergomi."""

from ._vohedge import (
    Greeks,
    __version__,
    first_order_mshe_ratio,
    greeks,
    hedge_path,
    implied_vol,
    relred_hklw_sabr,
    relred_rough,
    relred_sabr,
    rough_GH,
    rough_kernel,
    rough_smile,
    run_sweep,
    sabr_f,
    sabr_g,
    sabr_smile,
    simulate,
)

__all__ = [
    "Greeks",
    "__version__",
    "first_order_mshe_ratio",
    "greeks",
    "hedge_path",
    "implied_vol",
    "relred_hklw_sabr",
    "relred_rough",
    "relred_sabr",
    "rough_GH",
    "rough_kernel",
    "rough_smile",
    "run_sweep",
    "sabr_f",
    "sabr_g",
    "sabr_smile",
    "simulate",
]
