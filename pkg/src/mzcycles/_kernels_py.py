"""Pure-Python nested-sum kernel, used when the compiled extension is absent."""


def _neumaier(s, c, y):
    t = s + y
    if abs(s) >= abs(y):
        c += (s - t) + y
    else:
        c += (y - t) + s
    return t, c


def li_checkpoints(ks, zs, N, checkpoints):
    """Partial sums of sum_{n_1 > ... > n_m >= 1} prod z_i^{n_i} / n_i^{k_i}
    for n_1 <= c, at each checkpoint c (ascending, <= N)."""
    m = len(ks)
    ks = [float(k) for k in ks]
    inner = [0.0] * m
    comp = [0.0] * m
    inner[m - 1] = 1.0
    total = c = 0.0
    zs = [float(z) for z in zs]
    zp = [1.0] * m
    cps = sorted(checkpoints)
    out, ci = [], 0
    nxt = cps[0] if cps else N + 1
    for n in range(1, N + 1):
        dn = float(n)
        for i in range(m):
            zp[i] *= zs[i]
        term = [zp[i] * (inner[i] + comp[i]) / dn ** ks[i] for i in range(m)]
        total, c = _neumaier(total, c, term[0])
        for i in range(1, m):
            inner[i - 1], comp[i - 1] = _neumaier(inner[i - 1], comp[i - 1], term[i])
        while n == nxt:
            out.append(total + c)
            ci += 1
            nxt = cps[ci] if ci < len(cps) else N + 1
    return out
