# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: the oracle's hot operations on encoded tree pairs.

Same byte format and same results as _kernel_py, with all tree surgery done
in C on preorder arrays (1 = caret followed by its children, 0 = leaf).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.string cimport memcpy, memset

IMPL = "cython"

DEF MAXT = 4096          # bytes per input tree
DEF MAXW = 16384         # working buffer bytes
DEF MAXL = 8192          # leaf bookkeeping slots

ctypedef unsigned char u8


cdef inline int sub_end(const u8* t, int i) nogil:
    cdef int depth = 1
    while depth > 0:
        if t[i] == 1:
            depth += 1
        else:
            depth -= 1
        i += 1
    return i


cdef int _check_size(int need, int cap) except -1:
    if need > cap:
        raise ValueError("tree too large for the compiled kernel")
    return 0


# ---------------------------------------------------------------- refine

cdef int _refine(const u8* a, int ai, const u8* b, int bi, u8* out, int oi) except -1:
    cdef int n
    if a[ai] == 0:
        n = sub_end(b, bi) - bi
        _check_size(oi + n, MAXW)
        memcpy(out + oi, b + bi, n)
        return oi + n
    if b[bi] == 0:
        n = sub_end(a, ai) - ai
        _check_size(oi + n, MAXW)
        memcpy(out + oi, a + ai, n)
        return oi + n
    _check_size(oi + 1, MAXW)
    out[oi] = 1
    oi = _refine(a, ai + 1, b, bi + 1, out, oi + 1)
    return _refine(a, sub_end(a, ai + 1), b, sub_end(b, bi + 1), out, oi)


# ------------------------------------------------------- graft expansion

cdef int _spans(const u8* tpl, int ti, const u8* ref, int ri,
                int* offs, int* lens, int k) except -1:
    # Record, per template leaf, the refined subtree sitting at its position.
    if tpl[ti] == 0:
        _check_size(k + 1, MAXL)
        offs[k] = ri
        lens[k] = sub_end(ref, ri) - ri
        return k + 1
    k = _spans(tpl, ti + 1, ref, ri + 1, offs, lens, k)
    return _spans(tpl, sub_end(tpl, ti + 1), ref, sub_end(ref, ri + 1),
                  offs, lens, k)


cdef int _graft(const u8* tgt, int ti, const u8* ref,
                const int* offs, const int* lens, int* kp,
                u8* out, int oi) except -1:
    cdef int n
    if tgt[ti] == 0:
        n = lens[kp[0]]
        _check_size(oi + n, MAXW)
        memcpy(out + oi, ref + offs[kp[0]], n)
        kp[0] += 1
        return oi + n
    _check_size(oi + 1, MAXW)
    out[oi] = 1
    oi = _graft(tgt, ti + 1, ref, offs, lens, kp, out, oi + 1)
    return _graft(tgt, sub_end(tgt, ti + 1), ref, offs, lens, kp, out, oi)


# ---------------------------------------------------------------- reduce

cdef int _exposed_flags(const u8* t, int n, u8* flags) nogil:
    # flags[m] = 1 when a caret has both leaves exposed, numbered (m, m+1).
    cdef int i, k = 0
    for i in range(n):
        if t[i] == 1:
            if t[i + 1] == 0 and t[i + 2] == 0:
                flags[k] = 1
        else:
            k += 1
    return k


cdef int _remove(const u8* t, int n, const u8* kill, u8* out) nogil:
    cdef int i = 0, k = 0, oi = 0
    while i < n:
        if t[i] == 1 and t[i + 1] == 0 and t[i + 2] == 0 and kill[k]:
            out[oi] = 0
            oi += 1
            i += 3
            k += 2
        elif t[i] == 1:
            out[oi] = 1
            oi += 1
            i += 1
        else:
            out[oi] = 0
            oi += 1
            i += 1
            k += 1
    return oi


cdef void _reduce_pair(u8* neg, int* nn, u8* pos, int* pn) noexcept nogil:
    cdef u8 flags_n[MAXL]
    cdef u8 flags_p[MAXL]
    cdef u8 tmp[MAXW]
    cdef int leaves, m, found
    while (nn[0] - 1) // 2 > 1:
        memset(flags_n, 0, MAXL)
        memset(flags_p, 0, MAXL)
        leaves = _exposed_flags(neg, nn[0], flags_n)
        _exposed_flags(pos, pn[0], flags_p)
        found = 0
        for m in range(leaves):
            if flags_n[m] and flags_p[m]:
                flags_n[m] = 1
                found = 1
            else:
                flags_n[m] = 0
        if not found:
            return
        nn[0] = _remove(neg, nn[0], flags_n, tmp)
        memcpy(neg, tmp, nn[0])
        pn[0] = _remove(pos, pn[0], flags_n, tmp)
        memcpy(pos, tmp, pn[0])


# ------------------------------------------------------- multiplication

cdef bytes _multiply_raw(const u8* a, int na, const u8* b, int nb):
    # Product in word order: a's letters then b's.  Negative side of a and
    # positive side of b grow to a common refinement; the outer trees,
    # reduced, form the result.
    cdef int a_mid = sub_end(a, 0)          # a = neg | pos
    cdef int b_mid = sub_end(b, 0)
    cdef u8 ref[MAXW]
    cdef u8 res_neg[MAXW]
    cdef u8 res_pos[MAXW]
    cdef int offs[MAXL]
    cdef int lens[MAXL]
    cdef int k, rn, rp
    cdef int kp[1]

    _refine(a, 0, b, b_mid, ref, 0)

    # positive tree of a, expanded by what the refinement hangs below a.neg
    _spans(a, 0, ref, 0, offs, lens, 0)
    kp[0] = 0
    rp = _graft(a, a_mid, ref, offs, lens, kp, res_pos, 0)

    # negative tree of b, expanded by what the refinement hangs below b.pos
    _spans(b, b_mid, ref, 0, offs, lens, 0)
    kp[0] = 0
    rn = _graft(b, 0, ref, offs, lens, kp, res_neg, 0)

    cdef int nn[1]
    cdef int pn[1]
    nn[0] = rn
    pn[0] = rp
    _reduce_pair(res_neg, nn, res_pos, pn)
    return (PyBytes_FromStringAndSize(<const char*>res_neg, nn[0])
            + PyBytes_FromStringAndSize(<const char*>res_pos, pn[0]))


# ------------------------------------------------------------- exponents

cdef int _asc(const u8* t, int i, int* out, int* k) except -1:
    cdef int first, j
    if t[i] == 0:
        out[k[0]] = 0
        k[0] += 1
        return i + 1
    first = k[0]
    j = _asc(t, i + 1, out, k)
    out[first] += 1
    return _asc(t, j, out, k)


cdef int _hung(const u8* t, int i, int* out, int* k) except -1:
    cdef int j
    if t[i] == 0:
        out[k[0]] = 0
        k[0] += 1
        return i + 1
    j = _asc(t, i + 1, out, k)
    return _hung(t, j, out, k)


cdef int _exponents(const u8* t, int* out) except -1:
    # Leaf exponents of a nonempty tree; returns the leaf count.
    cdef int k[1]
    k[0] = 0
    cdef int j = _asc(t, 1, out, k)
    _hung(t, j, out, k)
    return k[0]


# ---------------------------------------------------------- classification

cdef int _families(const u8* t, int i, int lft, int rgt,
                   u8* fam, u8* hasr, int* idx) except -1:
    cdef int mid, my
    if t[i + 1] == 1:
        mid = _families(t, i + 1, lft, 0, fam, hasr, idx)
    else:
        mid = i + 2
    my = idx[0]
    idx[0] += 1
    fam[my] = 0 if lft else (2 if rgt else 1)
    hasr[my] = t[mid]
    if t[mid] == 1:
        return _families(t, mid, 0, rgt, fam, hasr, idx)
    return mid + 1


cdef int _types(const u8* t, u8* out) except -1:
    # Caret types in infix order, coded like trees.CaretType; returns count.
    cdef u8 fam[MAXL]
    cdef u8 hasr[MAXL]
    cdef int idx[1]
    cdef int n, i, seen
    idx[0] = 0
    _families(t, 0, 1, 1, fam, hasr, idx)
    n = idx[0]
    seen = 0
    for i in range(n - 1, -1, -1):
        if fam[i] == 0:
            out[i] = 0 if i == 0 else 1                  # L0 / LL
        elif fam[i] == 1:
            out[i] = 3 if hasr[i] else 2                 # IR / I0
        elif i + 1 < n and fam[i + 1] == 1:
            out[i] = 4                                   # RI
        elif seen:
            out[i] = 5                                   # RNI
        else:
            out[i] = 6                                   # R0
        if fam[i] == 1:
            seen = 1
    return n


cdef int _W[7][7]

def _init_weights():
    cdef int order[6]
    order[0] = 6; order[1] = 5; order[2] = 4    # R0, RNI, RI
    order[3] = 1; order[4] = 2; order[5] = 3    # LL, I0, IR
    cells = ((0, 2, 2, 1, 1, 3),
             (2, 2, 2, 1, 1, 3),
             (2, 2, 2, 1, 3, 3),
             (1, 1, 1, 2, 2, 2),
             (1, 1, 3, 2, 2, 4),
             (3, 3, 3, 2, 4, 4))
    for r in range(6):
        for c in range(6):
            _W[order[r]][order[c]] = cells[r][c]
    _W[0][0] = 0

_init_weights()


# ------------------------------------------------------------ public API

GEN_ENCODINGS = (
    bytes([1, 0, 1, 0, 0]) + bytes([1, 1, 0, 0, 0]),              # x0
    bytes([1, 1, 0, 0, 0]) + bytes([1, 0, 1, 0, 0]),              # x0^-1
    bytes([1, 0, 1, 0, 1, 0, 0]) + bytes([1, 0, 1, 1, 0, 0, 0]),  # x1
    bytes([1, 0, 1, 1, 0, 0, 0]) + bytes([1, 0, 1, 0, 1, 0, 0]),  # x1^-1
)

IDENTITY = bytes([1, 0, 0, 1, 0, 0])


cpdef bytes multiply(bytes a, bytes b):
    _check_size(len(a), 2 * MAXT)
    _check_size(len(b), 2 * MAXT)
    cdef const char* pa = a
    cdef const char* pb = b
    return _multiply_raw(<const u8*>pa, len(a), <const u8*>pb, len(b))


cpdef bytes apply_generator(bytes enc, int g):
    if g < 0 or g > 3:
        raise ValueError(f"bad generator code {g}")
    cdef bytes gb = GEN_ENCODINGS[g]
    _check_size(len(enc), 2 * MAXT)
    cdef const char* pe = enc
    cdef const char* pg = gb
    return _multiply_raw(<const u8*>pe, len(enc), <const u8*>pg, len(gb))


def neighbors(bytes enc):
    return (apply_generator(enc, 0), apply_generator(enc, 1),
            apply_generator(enc, 2), apply_generator(enc, 3))


cpdef bytes invert(bytes enc):
    cdef const char* p = enc
    cdef int mid = sub_end(<const u8*>p, 0)
    return enc[mid:] + enc[:mid]


cpdef str key(bytes enc):
    """Canonical normal form string of an encoded reduced pair."""
    cdef const char* p = enc
    cdef const u8* t = <const u8*>p
    cdef int mid = sub_end(t, 0)
    cdef int eneg[MAXL]
    cdef int epos[MAXL]
    _check_size(len(enc), 2 * MAXT)
    cdef int n_neg = _exponents(t, eneg)
    cdef int n_pos = _exponents(t + mid, epos)
    parts = []
    cdef int i
    for i in range(n_pos):
        if epos[i] == 1:
            parts.append(f"x{i}")
        elif epos[i] > 1:
            parts.append(f"x{i}^{epos[i]}")
    for i in range(n_neg - 1, -1, -1):
        if eneg[i] > 0:
            parts.append(f"x{i}^-{eneg[i]}")
    return " ".join(parts)


cpdef int fordham(bytes enc) except -1:
    """Exact word length of an encoded reduced pair."""
    cdef const char* p = enc
    cdef const u8* t = <const u8*>p
    cdef int mid = sub_end(t, 0)
    cdef u8 tneg[MAXL]
    cdef u8 tpos[MAXL]
    _check_size(len(enc), 2 * MAXT)
    cdef int n = _types(t, tneg)
    cdef int n2 = _types(t + mid, tpos)
    if n != n2:
        raise ValueError("pair sides have different caret counts")
    cdef int i, total = 0
    for i in range(n):
        total += _W[tneg[i]][tpos[i]]
    return total
