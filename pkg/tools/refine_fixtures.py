"""Reconstruct near-optimal fixture vectors for the benchmark instances.

Large-budget differential evolution plus Nelder-Mead polishing against the
packaged evaluator.  Writes one vector file per instance under
tools/fixtures-out/.
"""
import sys, time
import numpy as np
from scipy.optimize import minimize
from gtopx import problems
from gtopx._tables import BOUNDS

OUT = "tools/fixtures-out"

def fpen_batch(pid, X, lb, ub, pen):
    X = np.clip(X, lb, ub)
    F, G, S = problems.evaluate_many(pid, X)
    out = F[:, 0] + np.sum(np.maximum(0.0, -G), axis=1) * pen
    out[S != 0] = 1e9
    return out

def de(pid, seed, lb, ub, ngen, npop, pen, seeds_x=()):
    n = len(lb)
    rng = np.random.default_rng(seed)
    P = lb + rng.random((npop, n)) * (ub - lb)
    for i, sx in enumerate(seeds_x):
        if i < npop // 3:
            P[i] = np.clip(sx + rng.normal(0, 1, n) * (ub - lb) * (0.0 if i == 0 else 0.02), lb, ub)
    fP = fpen_batch(pid, P, lb, ub, pen)
    for g in range(ngen):
        idx = rng.integers(0, npop, size=(npop, 3))
        Fw = rng.uniform(0.4, 0.95)
        V = P[idx[:, 0]] + Fw * (P[idx[:, 1]] - P[idx[:, 2]])
        cross = rng.random((npop, n)) < 0.9
        cross[np.arange(npop), rng.integers(0, n, npop)] = True
        U = np.clip(np.where(cross, V, P), lb, ub)
        fU = fpen_batch(pid, U, lb, ub, pen)
        imp = fU < fP
        P[imp] = U[imp]; fP[imp] = fU[imp]
    b = int(np.argmin(fP))
    return float(fP[b]), P[b].copy()

def polish(pid, x0, lb, ub, pen, rounds=6):
    def fp(x):
        return float(fpen_batch(pid, np.asarray(x)[None, :], lb, ub, pen)[0])
    best = (fp(x0), np.clip(x0, lb, ub))
    rng = np.random.default_rng(123)
    for k in range(rounds):
        start = best[1] if k == 0 else np.clip(best[1] + rng.normal(0, 1, len(lb)) * (ub - lb) * 0.003, lb, ub)
        res = minimize(fp, start, method='Nelder-Mead',
                       options={'maxiter': 30000, 'maxfev': 60000, 'xatol': 1e-13, 'fatol': 1e-13, 'adaptive': True})
        if res.fun < best[0]:
            best = (res.fun, np.clip(res.x, lb, ub))
    return best

def campaign(pid, nseeds, ngen, npop, pen, seeds_x=(), fixed_int=None):
    lb, ub = BOUNDS[pid]
    lb = lb.copy(); ub = ub.copy()
    if fixed_int is not None:
        lb[6:10] = fixed_int; ub[6:10] = fixed_int
    t0 = time.time()
    results = []
    for seed in range(nseeds):
        fb, xb = de(pid, seed, lb, ub, ngen, npop, pen, seeds_x)
        results.append((fb, xb))
        print(f'  pid {pid} seed {seed}: {fb:.6f} [{time.time()-t0:.0f}s]', flush=True)
    results.sort(key=lambda r: r[0])
    fb, xb = polish(pid, results[0][1], lb, ub, pen)
    r = problems.evaluate(pid, xb)
    feas = bool((r.g >= 0).all())
    print(f'  pid {pid} FINAL: f={r.f[0]!r} feasible={feas} [{time.time()-t0:.0f}s]', flush=True)
    return xb, r

import os
os.makedirs(OUT, exist_ok=True)

task = sys.argv[1]

if task == 'c1':
    seeds_x = [np.array([-789.8055, 158.2993, 449.3857, 54.7171, 1024.5994, 4552.7992]),
               np.array([-790.877882, 158.658807, 449.385781, 55.430758, 1033.103037, 4511.599985])]
    x, r = campaign(1, 6, 2500, 192, 1e4, seeds_x)
    np.savetxt(f'{OUT}/cassini1_best.txt', x[None, :], fmt='%.17g')
elif task == 'c2':
    x, r = campaign(2, 8, 3000, 440, 1e4)
    np.savetxt(f'{OUT}/cassini2_best.txt', x[None, :], fmt='%.17g')
elif task == 'mr':
    seeds_x = []
    try:
        seeds_x.append(np.load('/tmp/mr_launch_best.npy'))
    except OSError:
        pass
    x, r = campaign(3, 8, 3000, 360, 1e4, seeds_x)
    np.savetxt(f'{OUT}/messenger_reduced_best.txt', x[None, :], fmt='%.17g')
elif task == 'mf':
    x, r = campaign(4, 10, 4000, 520, 1e4)
    np.savetxt(f'{OUT}/messenger_full_best.txt', x[None, :], fmt='%.17g')
elif task == 'g1':
    seeds_x = [np.load('/tmp/fix5.npy')]
    x, r = campaign(5, 6, 2500, 192, 1e6, seeds_x)
    np.savetxt(f'{OUT}/gtoc1_best.txt', x[None, :], fmt='%.17g')
elif task == 'g1quick':
    lb, ub = BOUNDS[5]
    xb, best = polish(5, np.load('/tmp/fix5.npy'), lb, ub, 1e6, rounds=8)[1], None
    r = problems.evaluate(5, xb)
    print('g1 quick:', r.f[0], bool((r.g>=0).all()))
    np.savetxt(f'{OUT}/gtoc1_best.txt', xb[None, :], fmt='%.17g')
elif task == 'ro':
    seeds_x = [np.loadtxt('src/gtopx/data/solutions/rosetta_prev_best.txt')]
    x, r = campaign(6, 6, 2500, 440, 1e4, seeds_x)
    np.savetxt(f'{OUT}/rosetta_best.txt', x[None, :], fmt='%.17g')
elif task == 'sa':
    x, r = campaign(7, 10, 3000, 240, 1e6)
    np.savetxt(f'{OUT}/sagas_best.txt', x[None, :], fmt='%.17g')
elif task == 'm8':
    x, r = campaign(8, 8, 2500, 200, 1e4, fixed_int=np.array([3.0, 2.0, 3.0, 5.0]))
    np.savetxt(f'{OUT}/cassini1_minlp_best.txt', x[None, :], fmt='%.17g')
elif task == 'm8b':
    x, r = campaign(8, 8, 2500, 200, 1e4, fixed_int=np.array([3.0, 3.0, 3.0, 5.0]))
    np.savetxt(f'{OUT}/cassini1_minlp_eeej.txt', x[None, :], fmt='%.17g')
