"""Pure-Python exhaustive scan. Same contract as the compiled ``_kernel``."""

IMPLEMENTATION = "python"


def _split(lo, hi, b, d):
    # per-value digit and digit-removed value for each position
    digs, reds = [], []
    powers = [b**i for i in range(d)]
    for v in range(lo, hi):
        dv, rv = [], []
        for p in powers:
            q, low = divmod(v, p)
            high, c = divmod(q, b)
            dv.append(c)
            rv.append(high * p + low)
        digs.append(dv)
        reds.append(rv)
    return digs, reds


def scan(b, d1, d2, m_lo, m_hi):
    """Test every (m, n, i1, i2) with m in [m_lo, m_hi) and n a d2-digit number.

    Returns ``(hits, pairs)`` where ``hits`` lists ``(m, n, i1, i2)`` whose digits
    match, whose reduced values are positive, and for which ``m*n' == m'*n``;
    ``pairs`` is the number of (m, n) pairs examined.
    """
    n_lo, n_hi = b ** (d2 - 1), b**d2
    mdig, mred = _split(m_lo, m_hi, b, d1)
    ndig, nred = _split(n_lo, n_hi, b, d2)
    hits = []
    r1, r2 = range(d1), range(d2)
    for mi in range(m_hi - m_lo):
        m = m_lo + mi
        md, mr = mdig[mi], mred[mi]
        for ni in range(n_hi - n_lo):
            n = n_lo + ni
            nd, nr = ndig[ni], nred[ni]
            for i2 in r2:
                c = nd[i2]
                n_red = nr[i2]
                for i1 in r1:
                    if md[i1] != c:
                        continue
                    m_red = mr[i1]
                    if n_red >= 1 and m_red >= 1 and m * n_red == m_red * n:
                        hits.append((m, n, i1, i2))
    return hits, (m_hi - m_lo) * (n_hi - n_lo)
