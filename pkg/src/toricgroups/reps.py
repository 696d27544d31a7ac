"""The rank-two pseudo-reflection representation of parent J-groups.

With theta = e^(i pi/a), phi = e^(i pi/b), psi = e^(i pi/c) as exact
cyclotomic numbers, any q, r satisfying

    q r = theta phi (psi + psi^-1) - theta^2 - phi^2

define a representation  s -> [[theta^2, q], [0, 1]],
t -> [[1, 0], [r, phi^2]],  u -> theta phi psi (t s)^-1  in which the
three generators act by pseudo-reflections.  The representation is not
faithful in general; ``unfaithfulness_witness`` reproduces the standard
counterexample at (a, b, c) = (6, 2, 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .cosets import CayleyTable, element_order, todd_coxeter
from .cyclo import Cyc, zeta
from .presentations import toric
from .words import Word

Mat2 = tuple[tuple[Cyc, Cyc], tuple[Cyc, Cyc]]


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_det(a: Mat2) -> Cyc:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def mat_inv(a: Mat2) -> Mat2:
    d = mat_det(a)
    return (
        (a[1][1] / d, -a[0][1] / d),
        (-a[1][0] / d, a[0][0] / d),
    )


def mat_scale(c: Cyc, a: Mat2) -> Mat2:
    return ((c * a[0][0], c * a[0][1]), (c * a[1][0], c * a[1][1]))


def mat_identity() -> Mat2:
    one, nil = Cyc.one(), Cyc.zero()
    return ((one, nil), (nil, one))


def mat_pow(a: Mat2, k: int) -> Mat2:
    if k < 0:
        return mat_pow(mat_inv(a), -k)
    out = mat_identity()
    while k:
        if k & 1:
            out = mat_mul(out, a)
        a = mat_mul(a, a)
        k >>= 1
    return out


def mat_str(a: Mat2) -> str:
    return f"[[{a[0][0]}, {a[0][1]}], [{a[1][0]}, {a[1][1]}]]"


class ConstraintError(ValueError):
    """q r differs from the required constraint value; carries both sides."""

    def __init__(self, got: Cyc, required: Cyc):
        self.got = got
        self.required = required
        super().__init__(f"q*r = {got} but the constraint requires {required}")


@dataclass(frozen=True)
class Rep:
    a: int
    b: int
    c: int
    theta: Cyc
    phi: Cyc
    psi: Cyc
    q: Cyc
    r: Cyc
    mat_s: Mat2
    mat_t: Mat2
    mat_u: Mat2

    @property
    def scalar(self) -> Cyc:
        """theta phi psi: the triple product s t u acts by this scalar."""
        return self.theta * self.phi * self.psi


def constraint_value(a: int, b: int, c: int) -> Cyc:
    theta, phi, psi = zeta(2 * a), zeta(2 * b), zeta(2 * c)
    return theta * phi * (psi + psi.inv()) - theta * theta - phi * phi


def qr_presets(a: int, b: int, c: int) -> dict[str, tuple[Cyc, Cyc]]:
    """Named (q, r) choices.

    When the constraint value is nonzero the canonical choices put it on
    either side; when it vanishes both (0,0) and (1,0) are admissible, and
    the two give non-isomorphic representations.
    """
    value = constraint_value(a, b, c)
    if value.is_zero():
        return {"zero": (Cyc.zero(), Cyc.zero()), "unit": (Cyc.one(), Cyc.zero())}
    return {"standard": (value, Cyc.one()), "swapped": (Cyc.one(), value)}


def build_rho(a: int, b: int, c: int, q: Cyc, r: Cyc) -> Rep:
    """Assemble the representation, enforcing the q r constraint exactly."""
    modulus = lcm(2 * a, 2 * b, 2 * c)
    theta = zeta(2 * a).embed(modulus)
    phi = zeta(2 * b).embed(modulus)
    psi = zeta(2 * c).embed(modulus)
    required = (theta * phi * (psi + psi.inv()) - theta * theta - phi * phi)
    q = q.embed(modulus) if q.n != modulus and modulus % q.n == 0 else q
    r = r.embed(modulus) if r.n != modulus and modulus % r.n == 0 else r
    got = q * r
    if got != required:
        raise ConstraintError(got, required)
    one, nil = Cyc.one().embed(modulus), Cyc.zero().embed(modulus)
    mat_s: Mat2 = ((theta * theta, q), (nil, one))
    mat_t: Mat2 = ((one, nil), (r, phi * phi))
    mat_u = mat_scale(theta * phi * psi, mat_mul(mat_inv(mat_t), mat_inv(mat_s)))
    return Rep(a, b, c, theta, phi, psi, q, r, mat_s, mat_t, mat_u)


def build_rho_preset(a: int, b: int, c: int, preset: str | None = None) -> Rep:
    presets = qr_presets(a, b, c)
    if preset is None:
        preset = next(iter(presets))
    if preset not in presets:
        raise ValueError(f"unknown (q,r) preset {preset!r}; have {sorted(presets)}")
    q, r = presets[preset]
    return build_rho(a, b, c, q, r)


def rho_eval(rep: Rep, w: Word) -> Mat2:
    """Evaluate a word over {s,t,u}, or over {x1..xn} via x_i = t^(i-1) s t^(1-i)."""
    names = w.alphabet.names
    if set(names) <= {"s", "t", "u"}:
        base = {"s": rep.mat_s, "t": rep.mat_t, "u": rep.mat_u}
        mats = [base[g] for g in names]
    elif all(g.startswith("x") for g in names):
        t_inv = mat_inv(rep.mat_t)
        mats = []
        for i in range(1, len(names) + 1):
            conj = mat_mul(mat_pow(rep.mat_t, i - 1), mat_mul(rep.mat_s, mat_pow(t_inv, i - 1)))
            mats.append(conj)
    else:
        raise ValueError(f"cannot resolve alphabet {names} to the representation")
    out = mat_identity()
    inverses = [mat_inv(m) for m in mats]
    for letter in w.letters:
        out = mat_mul(out, mats[letter - 1] if letter > 0 else inverses[-letter - 1])
    return out


@dataclass(frozen=True)
class WitnessReport:
    """The standard unfaithfulness example at (a, b, c) = (6, 2, 3)."""

    rho_of_cube_is_identity: dict[str, bool]  # per (q,r) preset
    order_in_small_quotient: int  # order of x1 x2 in the k = 3 toric group
    rho_stu_order: int
    rho_stu_is_minus_identity: bool
    zero_preset_commutes: bool
    unit_preset_commutes: bool

    @property
    def unfaithful(self) -> bool:
        return all(self.rho_of_cube_is_identity.values()) and self.order_in_small_quotient == 6


def unfaithfulness_witness(max_cosets: int = 10**6) -> WitnessReport:
    """(x1 x2)^3 dies in every admissible representation at (6,2,3), yet the
    image of x1 x2 in the k = 3 quotient has order 6, so the element is
    nontrivial and the representation cannot be faithful."""
    ab = toric(6, 2, 3, normalize=False).alphabet
    cube = Word(ab, (1, 2) * 3)
    results: dict[str, bool] = {}
    reps = {}
    for name, (q, r) in qr_presets(6, 2, 3).items():
        rep = build_rho(6, 2, 3, q, r)
        reps[name] = rep
        results[name] = rho_eval(rep, cube) == mat_identity()

    small = CayleyTable(todd_coxeter(toric(3, 2, 3, normalize=False), max_cosets=max_cosets))
    order = element_order(small, Word(small.alphabet, (1, 2)))

    rep0 = reps["zero"]
    stu = mat_mul(rep0.mat_s, mat_mul(rep0.mat_t, rep0.mat_u))
    minus_id = mat_scale(Cyc.rational(-1), mat_identity())
    stu_order = 1
    acc = stu
    while acc != mat_identity():
        acc = mat_mul(acc, stu)
        stu_order += 1
        if stu_order > 64:
            raise AssertionError("unexpected: stu image has large order")

    def commutes(rep: Rep) -> bool:
        return mat_mul(rep.mat_s, rep.mat_t) == mat_mul(rep.mat_t, rep.mat_s)

    return WitnessReport(
        rho_of_cube_is_identity=results,
        order_in_small_quotient=order,
        rho_stu_order=stu_order,
        rho_stu_is_minus_identity=(stu == minus_id),
        zero_preset_commutes=commutes(reps["zero"]),
        unit_preset_commutes=commutes(reps["unit"]),
    )
