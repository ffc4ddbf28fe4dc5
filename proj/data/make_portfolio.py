#!/usr/bin/env python3
# Copyright 2026 The PulseForge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/portfolio{2,4}.json from seeded synthetic price histories."""
import json
import sys

import numpy as np


def instance(n_assets, seed, days=60):
    rng = np.random.default_rng(seed)
    drift = rng.uniform(-0.002, 0.004, size=n_assets)
    vol = rng.uniform(0.01, 0.03, size=n_assets)
    mix = rng.normal(size=(n_assets, n_assets)) * 0.3 + np.eye(n_assets)
    noise = rng.normal(size=(days, n_assets)) @ mix.T
    prices = 100.0 * np.cumprod(1.0 + drift + vol * noise / np.sqrt(np.diag(mix @ mix.T)), axis=0)
    returns = np.diff(prices, axis=0) / prices[:-1]
    # annualise-ish so the objective terms are O(1)
    mu = returns.mean(axis=0) * 100.0
    sigma = np.cov(returns, rowvar=False) * 1000.0
    sigma = 0.5 * (sigma + sigma.T)
    return {
        "n_assets": n_assets,
        "seed": seed,
        "risk_factor": 0.5,
        "expected_returns": [round(float(v), 12) for v in mu],
        "covariance": [[round(float(v), 12) for v in row] for row in sigma],
    }


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "."
    for n, seed in ((2, 1234), (4, 5678)):
        with open(f"{out}/portfolio{n}.json", "w") as f:
            json.dump(instance(n, seed), f, indent=2)
            f.write("\n")
