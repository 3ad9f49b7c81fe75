"""Is the nested fibration-basis rewrite value-preserving on the fibre?"""
from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config, fibre_components
from mzvq.pushforward import forget_interior
from mzvq.modulipolylog import fibration_basis
from mzvq.numoracle import NumericContext, eval_expr

table = load_reduction_table(default_table_path())
ctx = NumericContext()
TV = 0.0

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})

REALS = ("0", "1")


def cj(s):
    if s in REALS:
        return s
    return s[1:] if s.startswith("~") else "~" + s


def prop(p, s):
    hol = (Expr.dlog(p, s) - Expr.dlog(cj(p), s)) * inv2pi
    sb = cj(s)
    if sb == s:
        return hol
    anti = (Expr.dlog(p, sb) - Expr.dlog(cj(p), sb)) * inv2pi
    return hol * one_minus_t + anti * t


omega = (prop("z2", "z1") * prop("z2", "0")
         * prop("z1", "0") * prop("z1", "1"))
s1 = forget_interior(omega, "z2", Config(reals=REALS, interior=("z1",)),
                     table)

for (tt, s), pieces in sorted(fibre_components(s1, "z1").items(),
                              key=str):
    if tt is None or s is None:
        continue
    carrier = Expr()
    for base_slots, atoms, c in pieces:
        carrier = carrier + Expr.term(c, base_slots, atoms)
    rewritten = fibration_basis(carrier, ("~z1", "z1"), "oo", table)
    for z in (0.37 + 0.61j, -0.8 + 1.3j):
        a = eval_expr(carrier, {"0": 0j, "1": 1 + 0j, "z1": z}, TV, ctx)
        b = eval_expr(rewritten, {"0": 0j, "1": 1 + 0j, "z1": z}, TV, ctx)
        print(f"comp ({tt},{s}) at {z}: before {a:.8f} after {b:.8f} "
              f"diff {abs(a-b):.2e}")

# also test a couple of single atoms
for atom in [Expr.atom("z1", ("~z1",)), Expr.atom("z1", ("~z1", "0")),
             Expr.atom("z1", ("0", "~z1")),
             Expr.atom("~z1", ("1",)) * Expr.atom("z1", ("~z1",))]:
    rewritten = fibration_basis(atom, ("~z1", "z1"), "oo", table)
    for z in (0.37 + 0.61j,):
        a = eval_expr(atom, {"0": 0j, "1": 1 + 0j, "z1": z}, TV, ctx)
        b = eval_expr(rewritten, {"0": 0j, "1": 1 + 0j, "z1": z}, TV, ctx)
        key = list(atom.terms)[0]
        print(f"atom {key}: before {a:.8f} after {b:.8f} diff {abs(a-b):.2e}")
