"""Second implementations used to cross-check the library."""

from sympy.combinatorics import Permutation


def sympy_faces(g):
    """Face cycles of d -> sigma(alpha(d)) computed with sympy, canonically ordered."""
    sigma = Permutation(list(g.sigma))
    alpha = Permutation(list(g.alpha))
    # sympy composes left to right: (p * q)(x) = q(p(x))
    face = alpha * sigma
    cycles = face.full_cyclic_form
    out = []
    for c in cycles:
        k = c.index(min(c))
        out.append(tuple(c[k:] + c[:k]))
    return sorted(out)


def walk_seifert_circles(word):
    """Count Seifert circles by walking: reaching a letter, jump to its twin and go on."""
    n = len(word)
    if n == 0:
        return 1
    twin = {}
    where = {}
    for i, x in enumerate(word):
        if x in where:
            twin[i], twin[where[x]] = where[x], i
        else:
            where[x] = i
    # arc k leaves position k and ends at position k+1
    used = [False] * n
    circles = 0
    for start in range(n):
        if used[start]:
            continue
        circles += 1
        k = start
        while not used[k]:
            used[k] = True
            end = (k + 1) % n
            k = twin[end]
    return circles


def perfect_matching_words(d):
    """All double-occurrence words on 2d positions, up to renaming labels."""
    def rec(free):
        if not free:
            yield {}
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            rest = free[1:i] + free[i + 1:]
            for m in rec(rest):
                m = dict(m)
                m[a], m[b] = b, a
                yield m

    for m in rec(list(range(2 * d))):
        label = {}
        word = []
        for i in range(2 * d):
            j = min(i, m[i])
            label.setdefault(j, len(label))
            word.append(label[j])
        yield tuple(word)
