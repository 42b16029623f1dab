from itertools import product

import pytest

from ncause import desc as D
from ncause.core import Kind
from ncause.errors import BadThreshold, DomainMismatch, UndecoratableInput, UnknownBuilder
from ncause.values import BOOL, FALSE, ORDER, TRUE

T, F = TRUE, FALSE
N, C, R = (ORDER.value(i) for i in range(3))


def bools(*xs):
    return [TRUE if x else FALSE for x in xs]


def test_input_and_const():
    d = D.input()
    assert d.kind is Kind.ACTION and d.fire is None and d.edges == ()
    c = D.const(TRUE)
    assert c.kind is Kind.LAW and c.edges == () and c.fire([]) == TRUE
    assert D.const(C).fire([]) == C


@pytest.mark.parametrize("xs, out", [((0, 1), 1), ((0, 0), 0), ((1, 1), 1)])
def test_stim_is_disjunction(xs, out):
    assert D.stim_by(["a", "b"]).fire(bools(*xs)).index == out


@pytest.mark.parametrize("vs, out", [([C, C, R], C), ([C, R], N), ([N, N], N), ([R, N], R)])
def test_resolve(vs, out):
    assert D.resolve(vs, ORDER) == out
    assert D.stim_by_order(["a"] * len(vs), ORDER).fire(vs) == out


@pytest.mark.parametrize("xs, out", [((0,), 1), ((1,), 0), ((1, 0), 1)])
def test_unstim(xs, out):
    d = D.unstim_by(["x"] * len(xs))
    assert d.fire(bools(*xs)).index == out
    assert all(e.style == (("arrowhead", "empty"),) for e in d.edges)


def test_thick():
    d = D.thick(2, ["a", "b"])
    assert d.fire(bools(1, 1)) == TRUE
    assert d.fire(bools(1, 0)) == FALSE
    assert d.style == (("penwidth", "3"),)
    one = D.thick(1, ["a"])
    assert [one.fire([v]) for v in (F, T)] == [F, T]
    for k in (0, 3):
        with pytest.raises(BadThreshold):
            D.thick(k, ["a", "b"])


@pytest.mark.parametrize("xs, out", [((1, 0), 1), ((1, 1), 0), ((0, 0), 0)])
def test_xor(xs, out):
    d = D.xor(["a", "b"])
    assert d.fire(bools(*xs)).index == out
    assert ("shape", "diamond") in d.style


def test_inhib_boolean():
    maje = D.inhib_by(D.stim_by(["Maj"]), ["Gen"])
    assert [e.source for e in maje.edges] == ["Maj", "Gen"]
    assert maje.edges[1].style == (("arrowhead", "dot"),)
    assert maje.fire(bools(1, 1)) == FALSE
    assert maje.fire(bools(1, 0)) == TRUE


def test_inhib_order_overrides_to_neutral():
    d = D.inhib_by(D.stim_by(["Maj"], ORDER), ["Gen"])
    assert d.fire([C, R]) == N
    assert d.fire([C, N]) == C


def test_inhib_rejects_inputs():
    with pytest.raises(UndecoratableInput):
        D.inhib_by(D.input(), ["x"])
    with pytest.raises(UndecoratableInput):
        D.or_d(D.input(), D.stim_by(["x"]))


def test_is_kind():
    duck = D.is_kind(D.stim_by(["Boulder"]), Kind.ACTION)
    assert duck.kind is Kind.ACTION
    assert duck.edges == D.stim_by(["Boulder"]).edges
    law_input = D.is_kind(D.input(), Kind.LAW)
    assert law_input.fire is None and law_input.kind is Kind.LAW


def test_or_composition():
    brian = D.or_d(D.stim_by(["Karen"]), D.unstim_by(["Sue"]))
    assert [e.source for e in brian.edges] == ["Karen", "Sue"]
    assert brian.fire(bools(0, 0)) == TRUE
    # or(False) OR anyNot(True)
    assert brian.fire(bools(0, 1)) == FALSE
    assert brian.kind is D.unstim_by(["Sue"]).kind


def test_and_composition_is_pointwise_conjunction():
    l, r = D.stim_by(["a"]), D.xor(["b", "c"])
    d = D.and_d(l, r)
    for xs in product((0, 1), repeat=3):
        vs = bools(*xs)
        expected = l.fire(vs[:1]).index and r.fire(vs[1:]).index
        assert d.fire(vs).index == expected


def test_compose_style_prefers_right():
    d = D.or_d(D.xor(["a", "b"]), D.by_rank(["c"], BOOL))
    # both set a shape; rendering keeps the last one
    assert [v for k, v in d.style if k == "shape"][-1] == "pentagon"
    assert d.kind is Kind.LAW


def test_extend_with_empty_suffix():
    base = D.stim_by(["a"])
    f = D.extend(base, lambda o, s: (o, s), lambda rest: len(rest))
    assert f([TRUE]) == (TRUE, 0)


def test_by_rank():
    d = D.by_rank(["Gen", "Maj"], ORDER)
    assert d.fire([C, R]) == C
    assert d.fire([N, R]) == R
    assert d.fire([N, N]) == N
    assert d.style == (("shape", "pentagon"),)


@pytest.mark.parametrize("make", [D.unstim_by, D.xor, lambda ns, dom: D.thick(1, ns, dom)])
def test_boolean_only_builders(make):
    with pytest.raises(DomainMismatch):
        make(["a"], ORDER)


def test_registry():
    assert {"input", "const", "stim", "unstim", "thick", "xor", "byrank",
            "if_", "ifNot", "ifAny", "ifAll"} <= set(D.REGISTRY)
    with pytest.raises(UnknownBuilder):
        D.lookup_builder("teleport")
    b = D.register_builder("nand", lambda dom, ns: D.is_kind(D.unstim_by(ns, dom), Kind.LAW))
    try:
        assert D.lookup_builder("nand") is b
    finally:
        del D.REGISTRY["nand"]


def test_inhibitors_that_do_not_fire_are_no_ops():
    for base in (D.stim_by(["a", "b"]), D.xor(["a", "b"]), D.thick(2, ["a", "b"])):
        d = D.inhib_by(base, ["x", "y"])
        for xs in product((0, 1), repeat=2):
            vs = bools(*xs)
            assert d.fire(vs + [F, F]) == base.fire(vs)
    o = D.inhib_by(D.stim_by(["a", "b"], ORDER), ["x"])
    for vs in product([N, C, R], repeat=2):
        assert o.fire(list(vs) + [N]) == D.stim_by(["a", "b"], ORDER).fire(list(vs))


def test_monotonicity():
    s, u = D.stim_by(["a", "b", "c"]), D.unstim_by(["a", "b", "c"])
    for xs in product((0, 1), repeat=3):
        for i in range(3):
            if xs[i]:
                continue
            up = list(xs)
            up[i] = 1
            assert s.fire(bools(*xs)).index <= s.fire(bools(*up)).index
            assert u.fire(bools(*xs)).index >= u.fire(bools(*up)).index
