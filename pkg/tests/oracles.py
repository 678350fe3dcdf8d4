"""Independent reference implementations used as oracles.

Everything here is deliberately written with different algorithms than
the package (full-matrix DP, permutation search, linear synset scans)
so agreement is meaningful.
"""

from itertools import permutations


def dp_levenshtein(a: str, b: str) -> int:
    """Textbook full-matrix dynamic program."""
    n, m = len(a), len(b)
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        table[i][0] = i
    for j in range(m + 1):
        table[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i][j] = min(
                table[i - 1][j] + 1,
                table[i][j - 1] + 1,
                table[i - 1][j - 1] + cost,
            )
    return table[n][m]


def dp_similarity(a: str, b: str) -> float:
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - dp_levenshtein(a, b) / longest


def _share_synset(x: str, y: str, synsets) -> bool:
    if x == y:
        return True
    for synset in synsets:
        if x in synset and y in synset:
            return True
    return False


def _bijection_exists(a_tokens, b_tokens, synsets) -> bool:
    if len(a_tokens) != len(b_tokens):
        return False
    for perm in permutations(b_tokens):
        if all(_share_synset(x, y, synsets) for x, y in zip(a_tokens, perm)):
            return True
    return False


def oracle_pair_score(a_tokens, b_tokens, synsets, synonym_value=0.9) -> float:
    a_joined = " ".join(a_tokens)
    b_joined = " ".join(b_tokens)
    sim_lev = dp_similarity(a_joined, b_joined)
    if a_joined == b_joined:
        sim_syn = 1.0
    elif _share_synset(a_joined, b_joined, synsets) and a_tokens and b_tokens:
        sim_syn = synonym_value
    elif a_tokens and _bijection_exists(a_tokens, b_tokens, synsets):
        sim_syn = synonym_value
    else:
        return sim_lev
    return (sim_syn + sim_lev) / 2.0


def brute_force_match(source_records, target_records, synsets, alpha,
                      synonym_value=0.9):
    """Sequential double loop over every cross pair; returns rows sorted
    by (descending score, source IRI, target IRI)."""
    rows = []
    for a in source_records:
        for b in target_records:
            score = oracle_pair_score(
                list(a.tokens), list(b.tokens), synsets, synonym_value
            )
            if score >= alpha:
                rows.append((a.iri, b.iri, score))
    rows.sort(key=lambda r: (-r[2], r[0], r[1]))
    return rows


def rows_to_tsv(rows) -> str:
    lines = ["source_iri\ttarget_iri\trelation\tscore"]
    for source, target, score in rows:
        lines.append(f"{source}\t{target}\t=\t{score:.4f}")
    return "\n".join(lines) + "\n"


def set_arith_eval(produced_pairs, reference_pairs):
    """Precision/recall/F from raw set arithmetic."""
    produced = set(produced_pairs)
    reference = set(reference_pairs)
    tp = len(produced & reference)
    if produced:
        precision = tp / len(produced)
    else:
        precision = 1.0 if not reference else 0.0
    recall = tp / len(reference) if reference else 1.0
    f = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f
