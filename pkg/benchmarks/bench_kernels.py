"""Compiled versus pure-numpy presentation kernel.

    python benchmarks/bench_kernels.py [--neurons 50] [--repeat 5]

Times one 350 ms presentation of a digit-like image (learning on and off) on
both backends and checks that they produce identical spikes and weights.
"""
from __future__ import annotations

import argparse
import math
import time

import numpy as np

from convsnn import kernels
from convsnn.encoding import poisson_train
from convsnn.engine import Network, NetworkConfig, _neuron_tuple


def workload(cfg: NetworkConfig, seed: int = 0):
    rng = np.random.default_rng(seed)
    img = np.zeros((cfg.image_h, cfg.image_w))
    img[6:22, 12:16] = 255
    img[6:9, 8:20] = 200
    spikes = poisson_train(img, cfg.encoder, rng).view(np.uint8)
    return Network(cfg), spikes


def call(fn, net: Network, spikes, learn: bool):
    cfg, n = net.config, net.num_excitatory
    w = net.weights.copy()
    out = fn(spikes, net.windows, w, float(cfg.input_gain), np.full(n, cfg.exc.v_rest),
             np.full(n, -math.inf), np.zeros(n), np.full(n, cfg.inh.v_rest),
             np.full(n, -math.inf), np.zeros(n), _neuron_tuple(cfg.exc), _neuron_tuple(cfg.inh),
             float(cfg.inhibition.w_relay), float(cfg.inhibition.w_inh), learn,
             (cfg.stdp.eta, cfg.stdp.tau, cfg.stdp.offset, cfg.stdp.w_max, cfg.stdp.mu),
             float(cfg.encoder.dt))
    return out, w


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--neurons", type=int, default=50)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    if kernels.compiled_run_presentation is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1
    cfg = NetworkConfig(num_excitatory=args.neurons)
    net, spikes = workload(cfg)
    backends = {"compiled": kernels.compiled_run_presentation,
                "python": kernels.python_run_presentation}

    print(f"{args.neurons} neurons, {spikes.shape[0]} steps, {spikes.shape[1]} inputs, "
          f"{len(cfg.schedule())} windows")
    print(f"{'mode':<8}{'compiled ms':>14}{'python ms':>12}{'speedup':>10}  match")
    for learn in (False, True):
        (c_out, c_w), (p_out, p_w) = (call(fn, net, spikes, learn) for fn in backends.values())
        same = all(np.array_equal(a, b) for a, b in zip(c_out, p_out)) and np.allclose(c_w, p_w, rtol=1e-12, atol=0)
        t = {k: best_of(lambda fn=fn: call(fn, net, spikes, learn), args.repeat)
             for k, fn in backends.items()}
        mode = "learn" if learn else "infer"
        print(f"{mode:<8}{t['compiled'] * 1e3:>14.2f}{t['python'] * 1e3:>12.2f}"
              f"{t['python'] / t['compiled']:>9.1f}x  {'yes' if same else 'NO'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
