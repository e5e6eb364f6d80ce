"""
One check per statement about real classes. Each check evaluates its
hypotheses in order (stopping at the first false one, so vacuity stays
visible in the verdict) and then its conclusion over every qualifying
element or subgroup. A failing verdict carries a JSON-ready witness.
"""
from __future__ import annotations

import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

from realclass.models import Verdict
from realclass.perm import Group, Permutation, conjugate, inverse, perm_format
from realclass.prime_graph import (
    ComponentBoundViolation,
    components_complete,
    components_vertex_sets,
    delta_star,
    graph_to_json,
    is_connected,
    is_subgraph,
)
from realclass.primes import coprime, is_two_power, prime_set
from realclass.real_classes import (
    chillag_mann_square_condition,
    extended_centralizer,
    is_real,
    noncentral_real_2parts,
    real_class_data,
    real_elements,
    real_witness_2element,
    sylow2_real_central,
)
from realclass.structure import (
    NORMAL_SUBGROUP_CAP,
    Subgroup,
    center,
    centralizer,
    class_size,
    class_size_divides,
    conjugacy_classes,
    derived_subgroup,
    has_sl32_factor,
    is_p_closed,
    is_p_nilpotent,
    is_p_solvable,
    is_solvable,
    normal_subgroups,
    o_lower,
    o_upper,
    quotient,
    sylow_subgroup,
)

logger = logging.getLogger(__name__)

Hypotheses = tuple[tuple[str, bool], ...]
Witness = Optional[Dict[str, Any]]


def _hypotheses(checks: Sequence[tuple[str, Callable[[], bool]]]) -> Hypotheses:
    out: List[tuple[str, bool]] = []
    for name, check in checks:
        value = bool(check())
        out.append((name, value))
        if not value:
            break
    return tuple(out)


def _holds(hyps: Hypotheses) -> bool:
    return all(v for _, v in hyps)


def _verdict(statement_id: str, hyps: Hypotheses, conclusion: Callable[[], Witness], *, sampled: bool = False) -> Verdict:
    if not _holds(hyps):
        return Verdict(statement_id, False, True, None, sampled, hyps)
    witness = conclusion()
    return Verdict(statement_id, True, witness is None, witness, sampled, hyps)


def _combine(statement_id: str, parts: Sequence[Verdict]) -> Verdict:
    parts = tuple(parts)
    sampled = any(p.sampled for p in parts)
    hyps = tuple((p.statement_id, p.applicable) for p in parts)
    if not any(p.applicable for p in parts):
        return Verdict(statement_id, False, True, None, sampled, hyps, parts)
    failed = [p.statement_id for p in parts if not p.passed]
    witness = {"failed_parts": failed} if failed else None
    return Verdict(statement_id, True, not failed, witness, sampled, hyps, parts)


def _elem(x: Permutation) -> str:
    return perm_format(x)


def _sub(H: Group) -> Dict[str, Any]:
    return {"order": H.order, "generators": [perm_format(g) for g in H.generators]}


def _real_reps(G: Group) -> List[Permutation]:
    return [c.representative for c in real_class_data(G).classes]


def _components(G: Group):
    """(pi1, pi2) of delta_star(G), or None when the component bound fails."""
    try:
        return components_vertex_sets(delta_star(G))
    except ComponentBoundViolation:
        return None


def _disconnected(G: Group) -> bool:
    return not is_connected(delta_star(G))


def _equals_o2prime(G: Group) -> bool:
    return o_upper(G, 2).order == G.order


def _proper_odd_index(G: Group, normal_cap: int) -> tuple[List[Subgroup], bool]:
    scan = normal_subgroups(G, normal_cap)
    found = [M for M in scan.subgroups if M.order < G.order and (G.order // M.order) % 2 == 1]
    return found, scan.sampled


def _nontrivial_odd_order(G: Group, normal_cap: int) -> tuple[List[Subgroup], bool]:
    scan = normal_subgroups(G, normal_cap)
    return [N for N in scan.subgroups if N.order > 1 and N.order % 2 == 1], scan.sampled


def _odd_primes_dividing(G: Group) -> List[int]:
    return sorted(p for p in prime_set(G.order) if p != 2)


# ---------------------------------------------------------------- Lemma 2.1


def check_lemma_2_1_1(G: Group) -> Verdict:
    """Every power of a real element is real."""

    def conclusion() -> Witness:
        for x in _real_reps(G):
            for k in range(2, x.order()):
                if not is_real(G, x ** k):
                    return {"element": _elem(x), "power": k}
        return None

    return _verdict("Lemma2.1.1", (), conclusion)


def check_lemma_2_1_2(G: Group) -> Verdict:
    """A real element is inverted by some 2-element."""

    def conclusion() -> Witness:
        for x in _real_reps(G):
            t = real_witness_2element(G, x)
            if not is_two_power(t.order()) or conjugate(x, t) != inverse(x):
                return {"element": _elem(x), "t": _elem(t)}
        return None

    return _verdict("Lemma2.1.2", (), conclusion)


def check_lemma_2_1_3(G: Group) -> Verdict:
    """A real element with odd class size squares to 1."""

    def conclusion() -> Witness:
        for c in real_class_data(G).classes:
            x = c.representative
            if c.size % 2 == 1 and not (x * x).is_identity():
                return {"element": _elem(x), "class_size": c.size}
        return None

    return _verdict("Lemma2.1.3", (), conclusion)


def check_lemma_2_1_4(G: Group) -> Verdict:
    """
    Commuting real x, y with coprime class sizes have xy real; when their
    orders are also coprime, both class sizes' primes divide |(xy)^G|.
    """
    reals = real_elements(G)

    def conclusion() -> Witness:
        for c in real_class_data(G).classes:
            x = c.representative
            for y in centralizer(G, x).sorted_elements:
                if y not in reals:
                    continue
                sy = class_size(G, y)
                if not coprime(c.size, sy):
                    continue
                xy = x * y
                if not is_real(G, xy):
                    return {"x": _elem(x), "y": _elem(y), "reason": "product not real"}
                if coprime(x.order(), y.order()):
                    need = prime_set(c.size) | prime_set(sy)
                    have = prime_set(class_size(G, xy))
                    if not need <= have:
                        return {
                            "x": _elem(x),
                            "y": _elem(y),
                            "reason": "primes missing from the product class size",
                            "missing": sorted(need - have),
                        }
        return None

    return _verdict("Lemma2.1.4", (), conclusion)


def check_lemma_2_1_5(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    """Real(G) = Real(M) for every proper normal M of odd index."""
    found, sampled = _proper_odd_index(G, normal_cap)
    hyps = _hypotheses([("has_proper_normal_subgroup_of_odd_index", lambda: bool(found))])
    target = real_elements(G)

    def conclusion() -> Witness:
        for M in found:
            if real_elements(M) != target:
                return {"normal_subgroup": _sub(M)}
        return None

    return _verdict("Lemma2.1.5", hyps, conclusion, sampled=sampled)


def check_lemma_2_1_6(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    """
    A real coset Nx with |N| or o(Nx) odd contains a real element of G,
    of odd order when o(Nx) is odd.
    """
    scan = normal_subgroups(G, normal_cap)
    instances = []
    for N in scan.subgroups:
        if N.order == 1 or N.order == G.order:
            continue
        Q = quotient(G, N)
        for c in real_class_data(Q.group).classes:
            q = c.representative
            if N.order % 2 == 1 or q.order() % 2 == 1:
                instances.append((N, Q, q))
    hyps = _hypotheses([("has_qualifying_real_coset", lambda: bool(instances))])

    def conclusion() -> Witness:
        for N, Q, q in instances:
            odd = q.order() % 2 == 1
            coset = sorted(Q.coset(q))
            if not any(is_real(G, y) and (not odd or y.order() % 2 == 1) for y in coset):
                return {
                    "normal_subgroup": _sub(N),
                    "coset_representative": _elem(Q.representatives[q.images[0]]),
                    "odd_order_required": odd,
                }
        return None

    return _verdict("Lemma2.1.6", hyps, conclusion, sampled=scan.sampled)


def check_lemma_2_1(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    return _combine(
        "Lemma2.1",
        [
            check_lemma_2_1_1(G),
            check_lemma_2_1_2(G),
            check_lemma_2_1_3(G),
            check_lemma_2_1_4(G),
            check_lemma_2_1_5(G, normal_cap),
            check_lemma_2_1_6(G, normal_cap),
        ],
    )


def check_extended_centralizer(G: Group) -> Verdict:
    """
    C*(x) = {g : x^g in {x, x^-1}} holds C(x) with index 2 for real x of
    order above 2 (index 1 otherwise); nontrivial real x of odd order has
    even class size.
    """

    def conclusion() -> Witness:
        for c in real_class_data(G).classes:
            x = c.representative
            if x.is_identity():
                continue
            try:
                E = extended_centralizer(G, x)
            except RuntimeError as e:
                return {"element": _elem(x), "reason": str(e)}
            expected = 2 if x.order() > 2 else 1
            if E.order != expected * centralizer(G, x).order:
                return {"element": _elem(x), "reason": "wrong index", "extended_order": E.order}
            if x.order() % 2 == 1 and c.size % 2 == 1:
                return {"element": _elem(x), "reason": "odd class size", "class_size": c.size}
        return None

    return _verdict("ExtendedCentralizer", (), conclusion)


# ---------------------------------------------------------------- Lemmas 2.2 - 2.7


def check_lemma_2_2(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    """|x^N| and |(Nx)^(G/N)| both divide |x^G|."""
    scan = normal_subgroups(G, normal_cap)
    found = [N for N in scan.subgroups if 1 < N.order < G.order]
    hyps = _hypotheses([("has_proper_nontrivial_normal_subgroup", lambda: bool(found))])
    def conclusion() -> Witness:
        for N in found:
            for c in conjugacy_classes(G):
                first, second = class_size_divides(G, N, c.representative)
                if not (first and second):
                    return {
                        "normal_subgroup": _sub(N),
                        "element": _elem(c.representative),
                        "in_subgroup_divides": first,
                        "in_quotient_divides": second,
                    }
        return None

    return _verdict("Lemma2.2", hyps, conclusion, sampled=scan.sampled)


def check_lemma_2_3(G: Group) -> Verdict:
    """These agree: nontrivial reals have even order; reals are 2-elements; G is 2-closed."""

    def conclusion() -> Witness:
        reals = real_elements(G)
        even = all(x.order() % 2 == 0 for x in reals if not x.is_identity())
        two_elements = all(is_two_power(x.order()) for x in reals)
        closed = is_p_closed(G, 2)
        if even == two_elements == closed:
            return None
        return {"even_order": even, "two_elements": two_elements, "two_closed": closed}

    return _verdict("Lemma2.3", (), conclusion)


def check_lemma_2_4(G: Group) -> Verdict:
    """delta_star(G) has at most two components."""

    def conclusion() -> Witness:
        graph = delta_star(G)
        if len(graph.components) <= 2:
            return None
        return {"graph": graph_to_json(graph)}

    return _verdict("Lemma2.4", (), conclusion)


def check_lemma_2_5(G: Group, p: int) -> Verdict:
    """With G = O^{2'}(G) and G p-solvable, G has a real element of order p."""
    hyps = _hypotheses(
        [
            ("p_odd", lambda: p % 2 == 1),
            ("p_divides_order", lambda: G.order % p == 0),
            ("equals_o2prime", lambda: _equals_o2prime(G)),
            ("p_solvable", lambda: is_p_solvable(G, p)),
        ]
    )

    def conclusion() -> Witness:
        if any(x.order() == p for x in _real_reps(G)):
            return None
        return {"prime": p}

    return _verdict(f"Lemma2.5[p={p}]", hyps, conclusion)


def check_lemma_2_6(G: Group) -> Verdict:
    """All real classes odd iff the Sylow 2-subgroup S is normal with Real(S) <= Z(S)."""

    def conclusion() -> Witness:
        all_odd = all(s % 2 == 1 for s in real_class_data(G).sizes)
        structure = is_p_closed(G, 2) and sylow2_real_central(G)
        if all_odd == structure:
            return None
        return {"all_real_sizes_odd": all_odd, "normal_sylow2_real_central": structure}

    return _verdict("Lemma2.6", (), conclusion)


def check_lemma_2_7(G: Group, p: int) -> Verdict:
    """
    An odd p dividing no real class size (SL(3,2) excluded when p = 3):
    G is p-solvable, O^{p'}(G) is solvable, O^{2'}(G) has a normal Sylow
    p-subgroup P, and P' <= Z(O^{2'}(G)).
    """
    hyps = _hypotheses(
        [
            ("p_odd", lambda: p % 2 == 1),
            ("p_divides_no_real_class_size", lambda: p not in real_class_data(G).rho_star),
            ("no_sl32_factor_when_p_is_3", lambda: p != 3 or not has_sl32_factor(G)),
        ]
    )

    def conclusion() -> Witness:
        K = o_upper(G, 2)
        checks = {
            "p_solvable": is_p_solvable(G, p),
            "o_upper_solvable": is_solvable(o_upper(G, p)),
            "o2prime_p_closed": is_p_closed(K, p),
        }
        if checks["o2prime_p_closed"]:
            P = sylow_subgroup(K, p)
            checks["derived_sylow_central"] = derived_subgroup(P).elements <= center(K).elements
        if all(checks.values()):
            return None
        return {"prime": p, **checks}

    return _verdict(f"Lemma2.7[p={p}]", hyps, conclusion)


def check_lemma_2_5_all(G: Group) -> Verdict:
    return _combine("Lemma2.5", [check_lemma_2_5(G, p) for p in _odd_primes_dividing(G)])


def check_lemma_2_7_all(G: Group) -> Verdict:
    return _combine("Lemma2.7", [check_lemma_2_7(G, p) for p in _odd_primes_dividing(G)])


def check_chillag_mann(G: Group) -> Verdict:
    """For a Sylow 2-subgroup S: Real(S) <= Z(S) iff x^2 = y^2 forces xZ(S) = yZ(S)."""

    def conclusion() -> Witness:
        S = sylow_subgroup(G, 2)
        central = real_elements(S) <= center(S).elements
        squares = chillag_mann_square_condition(S)
        if central == squares:
            return None
        return {"sylow2": _sub(S), "real_central": central, "square_condition": squares}

    return _verdict("ChillagMann", (), conclusion)


# ---------------------------------------------------------------- Section 3


def _labelings(pi1: frozenset[int], pi2: frozenset[int]) -> List[tuple[frozenset[int], frozenset[int]]]:
    """Labelings with 2 outside the second set; both when 2 is not a vertex."""
    if 2 in pi1:
        return [(pi1, pi2)]
    return [(pi1, pi2), (pi2, pi1)]


def check_lemma_3_1(G: Group) -> Verdict:
    """
    Two components pi1, pi2 with 2 not in pi2: some involution i has
    |i^G| > 1 a pi2-number and C_G(i) 2-closed.
    """
    comps = _components(G)
    hyps = _hypotheses([("two_components", lambda: comps is not None and comps[1] is not None)])

    def conclusion() -> Witness:
        pi1, pi2 = comps
        involutions = [c for c in real_class_data(G).classes if c.representative.order() == 2 and c.size > 1]
        for first, second in _labelings(pi1, pi2):
            ok = any(
                prime_set(c.size) <= second and is_p_closed(centralizer(G, c.representative), 2)
                for c in involutions
            )
            if not ok:
                return {"pi1": sorted(first), "pi2": sorted(second)}
        return None

    return _verdict("Lemma3.1", hyps, conclusion)


def check_lemma_3_2(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    """delta_star(G/N) is a subgraph of delta_star(G) for normal N of odd order."""
    found, sampled = _nontrivial_odd_order(G, normal_cap)
    hyps = _hypotheses([("has_nontrivial_odd_order_normal_subgroup", lambda: bool(found))])

    def conclusion() -> Witness:
        graph = delta_star(G)
        for N in found:
            small = delta_star(quotient(G, N).group)
            if not is_subgraph(small, graph):
                return {"normal_subgroup": _sub(N), "quotient_graph": graph_to_json(small)}
        return None

    return _verdict("Lemma3.2", hyps, conclusion, sampled=sampled)


def check_prop_3_3_1(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    """Disconnected, not 2-closed: delta_star(M) stays disconnected for normal M of odd index."""
    found, sampled = _proper_odd_index(G, normal_cap)
    hyps = _hypotheses(
        [
            ("delta_star_disconnected", lambda: _disconnected(G)),
            ("not_two_closed", lambda: not is_p_closed(G, 2)),
            ("has_proper_normal_subgroup_of_odd_index", lambda: bool(found)),
        ]
    )

    def conclusion() -> Witness:
        for M in found:
            if is_connected(delta_star(M)):
                return {"normal_subgroup": _sub(M), "graph": graph_to_json(delta_star(M))}
        return None

    return _verdict("Prop3.3.1", hyps, conclusion, sampled=sampled)


def check_prop_3_3_2(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    """Disconnected, G = O^{2'}(G) not 2-nilpotent: delta_star(G/N) disconnected for odd-order normal N."""
    found, sampled = _nontrivial_odd_order(G, normal_cap)
    hyps = _hypotheses(
        [
            ("delta_star_disconnected", lambda: _disconnected(G)),
            ("equals_o2prime", lambda: _equals_o2prime(G)),
            ("not_two_nilpotent", lambda: not is_p_nilpotent(G, 2)),
            ("has_nontrivial_odd_order_normal_subgroup", lambda: bool(found)),
        ]
    )

    def conclusion() -> Witness:
        for N in found:
            graph = delta_star(quotient(G, N).group)
            if is_connected(graph):
                return {"normal_subgroup": _sub(N), "quotient_graph": graph_to_json(graph)}
        return None

    return _verdict("Prop3.3.2", hyps, conclusion, sampled=sampled)


def check_prop_3_3(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    return _combine("Prop3.3", [check_prop_3_3_1(G, normal_cap), check_prop_3_3_2(G, normal_cap)])


def check_theorem_A(G: Group) -> Verdict:
    """A disconnected delta_star(G) forces G solvable."""
    hyps = _hypotheses([("delta_star_disconnected", lambda: _disconnected(G))])

    def conclusion() -> Witness:
        if is_solvable(G):
            return None
        return {"graph": graph_to_json(delta_star(G))}

    return _verdict("TheoremA", hyps, conclusion)


def check_theorem_3_5(G: Group) -> Verdict:
    """
    G = O^{2'}(G) disconnected: both components are complete, pi1 = {2}, and
    pi2 = pi(|i^G|) for a non-central involution i.
    """
    hyps = _hypotheses(
        [
            ("equals_o2prime", lambda: _equals_o2prime(G)),
            ("delta_star_disconnected", lambda: _disconnected(G)),
        ]
    )

    def conclusion() -> Witness:
        comps = _components(G)
        if comps is None:
            return {"reason": "more than two components", "graph": graph_to_json(delta_star(G))}
        pi1, pi2 = comps
        graph = delta_star(G)
        if not components_complete(graph):
            return {"reason": "component not complete", "graph": graph_to_json(graph)}
        if pi1 != frozenset({2}):
            return {"pi1": sorted(pi1), "pi2": sorted(pi2)}
        for c in real_class_data(G).classes:
            if c.representative.order() == 2 and c.size > 1 and prime_set(c.size) == pi2:
                return None
        return {"pi1": sorted(pi1), "pi2": sorted(pi2), "reason": "no involution class realizes pi2"}

    return _verdict("Theorem3.5", hyps, conclusion)


def check_lemma_3_6(G: Group) -> Verdict:
    """Normal Sylow 2-subgroup S with Real(S) <= Z(S) forces delta_star(G) connected."""
    hyps = _hypotheses(
        [
            ("two_closed", lambda: is_p_closed(G, 2)),
            ("sylow2_real_central", lambda: sylow2_real_central(G)),
        ]
    )

    def conclusion() -> Witness:
        graph = delta_star(G)
        return None if is_connected(graph) else {"graph": graph_to_json(graph)}

    return _verdict("Lemma3.6", hyps, conclusion)


def check_theorem_B(G: Group) -> Verdict:
    """
    Disconnected delta_star(G): 2 divides a real class size, and G is
    2-closed or delta_star(O^{2'}(G)) is disconnected into complete
    components with every real class size of O^{2'}(G) odd or a 2-power.
    """
    hyps = _hypotheses([("delta_star_disconnected", lambda: _disconnected(G))])

    def conclusion() -> Witness:
        two_divides = 2 in delta_star(G).vertices
        two_closed = is_p_closed(G, 2)
        K = o_upper(G, 2)
        k_sizes = real_class_data(K).sizes
        k_graph = delta_star(K)
        o2prime_branch = (
            not is_connected(k_graph)
            and components_complete(k_graph)
            and all(s % 2 == 1 or is_two_power(s) for s in k_sizes)
        )
        if two_divides and (two_closed or o2prime_branch):
            return None
        return {
            "two_divides_real_size": two_divides,
            "two_closed": two_closed,
            "o2prime_branch": o2prime_branch,
            "o2prime_order": K.order,
            "o2prime_real_sizes": list(k_sizes),
        }

    return _verdict("TheoremB", hyps, conclusion)


# ---------------------------------------------------------------- Section 4


def _common_even_2part(G: Group) -> bool:
    parts = noncentral_real_2parts(G)
    return len(parts) <= 1 and all(a >= 2 for a in parts)


def check_lemma_4_1(G: Group) -> Verdict:
    """Real(S) <= Z(S) and a common 2-part 2^a >= 2: real 2-elements are central involutions."""
    hyps = _hypotheses(
        [
            ("common_even_noncentral_2part", lambda: _common_even_2part(G)),
            ("sylow2_real_central", lambda: sylow2_real_central(G)),
        ]
    )

    def conclusion() -> Witness:
        for c in real_class_data(G).classes:
            y = c.representative
            if y.is_identity() or not is_two_power(y.order()):
                continue
            if y.order() != 2 or c.size != 1:
                return {"element": _elem(y), "order": y.order(), "class_size": c.size}
        return None

    return _verdict("Lemma4.1", hyps, conclusion)


def check_lemma_4_2(G: Group, normal_cap: int = NORMAL_SUBGROUP_CAP) -> Verdict:
    """The common 2-part passes to normal subgroups of odd index."""
    found, sampled = _proper_odd_index(G, normal_cap)
    hyps = _hypotheses(
        [
            ("common_even_noncentral_2part", lambda: _common_even_2part(G)),
            ("has_proper_normal_subgroup_of_odd_index", lambda: bool(found)),
        ]
    )

    def conclusion() -> Witness:
        parts = noncentral_real_2parts(G)
        for K in found:
            k_parts = noncentral_real_2parts(K)
            if not k_parts <= parts:
                return {"normal_subgroup": _sub(K), "group_2parts": sorted(parts), "subgroup_2parts": sorted(k_parts)}
        return None

    return _verdict("Lemma4.2", hyps, conclusion, sampled=sampled)


def check_lemma_4_3(G: Group) -> Verdict:
    """Under the Lemma 4.1 hypotheses, real 2-elements of G/O_{2'}(G) are central."""
    hyps = _hypotheses(
        [
            ("common_even_noncentral_2part", lambda: _common_even_2part(G)),
            ("sylow2_real_central", lambda: sylow2_real_central(G)),
        ]
    )

    def conclusion() -> Witness:
        N = o_lower(G, 2)
        Q = quotient(G, N).group
        for c in real_class_data(Q).classes:
            y = c.representative
            if y.is_identity() or not is_two_power(y.order()):
                continue
            if c.size != 1:
                return {"o2prime_core": _sub(N), "quotient_order": Q.order, "class_size": c.size}
        return None

    return _verdict("Lemma4.3", hyps, conclusion)


def _theorem_c_hypotheses(G: Group) -> Hypotheses:
    return _hypotheses(
        [
            ("common_noncentral_2part", lambda: len(noncentral_real_2parts(G)) <= 1),
            ("sylow2_real_central", lambda: sylow2_real_central(G)),
        ]
    )


def check_theorem_4_4(G: Group) -> Verdict:
    def conclusion() -> Witness:
        return None if is_solvable(G) else {"solvable": False}

    return _verdict("Theorem4.4", _theorem_c_hypotheses(G), conclusion)


def check_theorem_4_5(G: Group) -> Verdict:
    def conclusion() -> Witness:
        K = o_upper(G, 2)
        return None if is_p_nilpotent(K, 2) else {"o2prime_order": K.order}

    return _verdict("Theorem4.5", _theorem_c_hypotheses(G), conclusion)


def check_theorem_C(G: Group) -> Verdict:
    """A common 2-part over non-central real classes and Real(S) <= Z(S):
    G is solvable and O^{2'}(G) is 2-nilpotent."""

    def conclusion() -> Witness:
        solvable = is_solvable(G)
        nilpotent = is_p_nilpotent(o_upper(G, 2), 2)
        if solvable and nilpotent:
            return None
        return {"solvable": solvable, "o2prime_two_nilpotent": nilpotent}

    return _verdict("TheoremC", _theorem_c_hypotheses(G), conclusion)

