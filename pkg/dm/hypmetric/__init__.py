# Copyright (C) 2026; see 'LICENSE.txt' for details
"""Hyperbolic type metrics of proper subdomains of `R^n`."""
