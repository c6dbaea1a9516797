"""Verbatim transcriptions of the printed bound expressions.

Each entry is a function of (r, s, k, p), evaluated with exact arithmetic;
``h`` and ``q4`` stand for the printed 1/2 and 1/4 coefficients.  The
``*_N`` tables hold the expressions in (n, p) before an endpoint is
substituted.  The printed worked examples for (r, s) = (9, 2) and (2, 1) are
kept separately as functions of (k, p).
"""

from fractions import Fraction

h = Fraction(1, 2)
q4 = Fraction(1, 4)


def _C0(r, s, k, p):
    return (
        12*k*p**4*r**2*s
        + p**3*(-32*s**3 + r**2*(-12*k*s + 24*k**2*s) + r*(24*s**2 + 24*k*s**2))
        + p**2*(12*s**3 - 36*k*s**3 + r**2*(30*s + 33*k*s - 18*k**2*s + 12*k**3*s)
                + r*(-66*s**2 + 18*k*s**2 + 36*k**2*s**2))
        + p*(-96*r**8*s**2 + 2*s**3 + 6*k*s**3 - 12*k**2*s**3 + 360*r**6*s**4
             - 24*s**6 + 24*s**10 - 2*r**5*(-24*s + 60*s**5)
             - 2*r**4*(-12*s**2 + 204*s**6) - 2*r**3*(60*s**3 - 120*s**7)
             + r**2*(-36*s + 15*k*s + 33*k**2*s - 6*k**3*s + 120*s**8)
             + r*(13*s**2 - 33*k*s**2 + 12*k**3*s**2 - 2*(-36*s**5 + 60*s**9)))
    )


def _C1(r, s, k, p):
    return (
        12*k*p**4*r**2*s
        + p**3*(r**2*(24*k**2*s + 12*k*s) + r*(24*s**2 - 24*k*s**2) - 32*s**3)
        + p**2*(r*(-36*k**2*s**2 + 18*k*s**2 + 66*s**2)
                + r**2*(12*k**3*s + 18*k**2*s + 33*k*s - 30*s) - 36*k*s**3 - 12*s**3)
        + p*(r*(-12*k**3*s**2 + 33*k*s**2 + 13*s**2 - 2*(60*s**9 - 36*s**5))
             - 12*k**2*s**3 + r**2*(6*k**3*s + 33*k**2*s - 15*k*s + 120*s**8 - 36*s)
             - 6*k*s**3 - 96*r**8*s**2 + 360*r**6*s**4 - 2*r**5*(60*s**5 - 24*s)
             - 2*r**4*(204*s**6 - 12*s**2) - 2*r**3*(60*s**3 - 120*s**7)
             + 24*s**10 - 24*s**6 + 2*s**3)
        - 24*r**8*s**2 + 24*r**7*s**2 + r**6*(90*s**4 - 24*s**3 - 24*s**2)
        + r**5*(-30*s**5 - 42*s**4 + 24*s**3 + 33*s)
        + r**4*(-102*s**6 + 48*s**5 + 42*s**4 - 5*h*s**2 - 24*s)
        + r**3*(60*s**7 + 12*s**6 - 48*s**5 - 54*s**3 + 12*s**2 + 2*s)
        + r**2*(30*s**8 - 24*s**7 - 12*s**6 + 19*h*s**4 + 24*s**3 - s**2 - 21*h)
        + r*(-30*s**9 + 6*s**8 + 24*s**7 + 21*s**5 - 12*s**4 - 2*s**3 - s + 6)
        + 6*s**10 - 6*s**8 - 7*s**6 + s**4 + s**2 - 1
    )


def _C2(r, s, k, p):
    return (
        12*k*p**4*r**2*s
        + p**3*(r**2*(24*k**2*s + 12*k*s) + r*(24*k*s**2 - 24*s**2) + 32*s**3)
        + r*(24*k**2*s**2 + 26*k*s**2 - 60*s**9 + 36*s**5 + 7*s**2) + 12*k**2*s**3
        + p**2*(r*(36*k**2*s**2 - 18*k*s**2 + 30*s**2)
                + r**2*(12*k**3*s + 18*k**2*s + 33*k*s - 30*s) + 60*k*s**3 + 36*s**3)
        + p*(r*(12*k**3*s**2 + 63*k*s**2 + 35*s**2 - 2*(60*s**9 - 36*s**5))
             + 36*k**2*s**3 + r**2*(6*k**3*s + 33*k**2*s - 15*k*s + 120*s**8 + 6*s)
             + 42*k*s**3 - 96*r**8*s**2 + 360*r**6*s**4 - 2*r**5*(60*s**5 - 24*s)
             - 2*r**4*(204*s**6 - 12*s**2) - 2*r**3*(60*s**3 - 120*s**7)
             + 24*s**10 - 24*s**6 + 10*s**3)
        + r**2*(21*k*s + 60*s**8 + 21*h*s) + 4*k*s**3 - 48*r**8*s**2 + 180*r**6*s**4
        + r**5*(24*s - 60*s**5) + r**4*(12*s**2 - 204*s**6) + r**3*(120*s**7 - 60*s**3)
        + 12*s**10 - 12*s**6 + 8*k**3*s**3
    )


def _C3(r, s, k, p):
    return (
        12*k*p**4*r**2*s
        + p**3*(r**2*(24*k**2*s + 36*k*s) + r*(-24*k*s**2 - 24*s**2) + 32*s**3)
        + p**2*(r*(-36*k**2*s**2 - 90*k*s**2 - 102*s**2)
                + r**2*(12*k**3*s + 54*k**2*s + 69*k*s + 30*s) + 60*k*s**3 + 60*s**3)
        + p*(36*k**2*s**3 + r**2*(18*k**3*s + 69*k**2*s + 93*k*s + 120*s**8 + 66*s)
             + r*(-12*k**3*s**2 - 72*k**2*s**2 - 171*k*s**2 - 120*s**9 + 72*s**5 - 97*s**2)
             + 78*k*s**3 - 96*r**8*s**2 + 360*r**6*s**4 + r**5*(48*s - 120*s**5)
             + r**4*(24*s**2 - 408*s**6) + r**3*(240*s**7 - 120*s**3)
             + 24*s**10 - 24*s**6 + 34*s**3)
        + r**2*(6*k**3*s + 39*k**2*s + 69*k*s + 90*s**8 - 24*s**7 - 12*s**6
                + 19*h*s**4 + 24*s**3 - s**2 + 51*h*s - 21*h)
        + r*(-12*k**3*s**2 - 60*k**2*s**2 - 79*k*s**2 - 90*s**9 + 6*s**8 + 24*s**7
             + 57*s**5 - 12*s**4 - 2*s**3 - 26*s**2 - s + 6)
        + 22*k*s**3 - 72*r**8*s**2 + 24*r**7*s**2 + r**6*(270*s**4 - 24*s**3 - 24*s**2)
        + r**5*(-90*s**5 - 42*s**4 + 24*s**3 + 57*s)
        + r**4*(-306*s**6 + 48*s**5 + 42*s**4 + 19*h*s**2 - 24*s)
        + r**3*(180*s**7 + 12*s**6 - 48*s**5 - 114*s**3 + 12*s**2 + 2*s)
        + 18*s**10 - 6*s**8 - 19*s**6 + s**4 + 8*k**3*s**3 + 24*k**2*s**3 + 6*s**3
        + s**2 - 1
    )


def _D0_t1(r, s, k, p):
    return (
        p**2*(r*(4*k*s - 4*s) + 8*s**2)
        + p*(r*(4*k**2*s - 2*k*s - 2*(-4*s**4 - 4*s) - 6*s) + 4*k*s**2 - 8*r**3*s**2
             - 2*r**2*(2*s - 4*s**3) - 8*s**5 + 4*s**3 - 8*s**2)
    )


def _D1_t1(r, s, k, p):
    return (
        p**2*(r*(4*k*s - 4*s) + 8*s**2)
        + p*(r*(4*k**2*s - 2*k*s + 8*s**4 + 2*s) + 4*k*s**2 - 8*r**3*s**2
             + r**2*(8*s**3 - 4*s) - 8*s**5 + 4*s**3 - 8*s**2)
        + r**3*(s - 2*s**2) + r**2*(2*s**3 - 2*s) + r*(2*s**4 - s**3 + 2*s + 3)
        - 2*s**5 + 2*s**3 - 2*s**2 + 2*s - 2
    )


def _D1_vertex(r, s, k, p):
    return (
        p**2*(r*(4*k*s - 4*s) + 4*s**2)
        + p*(r*(4*k**2*s - 2*k*s + 8*s**4 + 6*s) + 4*k*s**2 - 8*r**3*s**2
             + r**2*(8*s**3 - 4*s) - 8*s**5 + 4*s**3 - 6*s**2)
        + r**3*(s - 2*s**2) + r**2*(2*s**3 - 2*s - 1) + r*(2*s**4 - s**3 + s + 3)
        - 2*s**5 + 2*s**3 - 9*q4*s**2 + 2*s - 2
    )


def _D2_t2(r, s, k, p):
    return (
        p**2*(r*(4*k*s - 4*s) + 8*s**2)
        + p*(r*(4*k**2*s - 2*k*s + 8*s**4 + 10*s) + 12*k*s**2 - 8*r**3*s**2
             + r**2*(8*s**3 - 4*s) - 8*s**5 + 4*s**3)
        + 4*k**2*s**2 + r*(4*k*s + 4*s**4 + 6*s) + 6*k*s**2 - 4*r**3*s**2
        + r**2*(4*s**3 - 2*s) - 4*s**5 + 2*s**3 - 2*s**2
    )


def _D3_t3(r, s, k, p):
    return (
        p**2*r*(4*k*r*s + 4*r*s - 8*s**2)
        + p*r*(4*k**2*r*s + 10*k*r*s - 12*k*s**2 - 8*r**3*s**2 + 8*r**2*s**3
               - 4*r**2*s + 8*r*s**4 + 18*r*s - 8*s**5 + 4*s**3 - 16*s**2)
        + r*(4*k**2*r*s - 4*k**2*s**2 + 10*k*r*s - 6*k*s**2 - 4*r**3*s**2
             - r**3*(2*s**2 - s) + 4*r**2*s**3 - r**2*(2*s - 2*s**3) - 2*r**2*s
             + 4*r*s**4 - r*(-2*s**4 + s**3 - 2*s - 1) + 8*r*s - 2*r
             - 6*s**5 + 4*s**3 - 8*s**2)
    )


def _D3_t4(r, s, k, p):
    return (
        p**2*r*(4*k*r*s + 4*r*s - 8*s**2)
        + p*r*(4*k**2*r*s + 10*k*r*s - 4*k*s**2 - 8*r**3*s**2 + 8*r**2*s**3
               - 4*r**2*s + 8*r*s**4 + 10*r*s - 8*s**5 + 4*s**3 - 24*s**2)
        + r*(4*k**2*r*s + 6*k*r*s - 4*k*s**2 - 4*r**3*s**2 - r**3*(2*s**2 - s)
             + 4*r**2*s**3 - r**2*(2*s - 2*s**3) - 2*r**2*s + 4*r*s**4
             - r*(-2*s**4 + s**3 - 2*s - 1) + 2*r*s - 2*r - 6*s**5 + 4*s**3 - 14*s**2)
    )


def _E0_t1(r, s, k, p):
    return (
        p**2*(-4*r*s + 4*k*r*s + 8*s**2)
        + p*(-8*r*s - 2*k*r*s + 4*k**2*r*s + 4*s**2 + 4*k*s**2
             - 2*(4*s**2 + 8*r**3*s**2 + 2*s**3 - 4*s**5 + r**2*(4*s - 20*s**3)
                  + r*(-4*s - 6*s**2 + 16*s**4)))
    )


def _E1_t1(r, s, k, p):
    return (
        p*(4*k**2*r*s - 2*k*r*s + 4*k*s**2 - 16*r**3*s**2 + 40*r**2*s**3 - 8*r**2*s
           - 32*r*s**4 + 12*r*s**2 + 8*s**5 - 4*s**3 - 4*s**2)
        + p**2*(4*k*r*s - 4*r*s + 8*s**2)
        - 4*r**3*s**2 + 2*r**3*s + 10*r**2*s**3 - 3*r**2*s**2 - 4*r**2*s - 8*r*s**4
        + r*s**3 + 6*r*s**2 + 2*r*s + 5*r + 2*s**5 - 2*s**3 - 2*s**2 - 2*s - 2
    )


def _E1_vertex(r, s, k, p):
    return (
        p*(4*k**2*r*s - 2*k*r*s + 4*k*s**2 - 16*r**3*s**2 + 40*r**2*s**3 - 8*r**2*s
           - 32*r*s**4 + 12*r*s**2 + 6*r*s + 8*s**5 - 4*s**3 - 6*s**2)
        + p**2*(4*k*r*s - 4*r*s + 4*s**2)
        - 4*r**3*s**2 + 2*r**3*s + 10*r**2*s**3 - 3*r**2*s**2 - 4*r**2*s - 9*q4*r**2
        - 8*r*s**4 + r*s**3 + 6*r*s**2 + 7*h*r*s + 5*r + 2*s**5 - 2*s**3
        - 9*q4*s**2 - 2*s - 2
    )


def _E2_t2(r, s, k, p):
    # printed with an unbalanced parenthesis; read as p^2 (4krs - 4rs + 8s^2)
    return (
        p**2*(4*k*r*s - 4*r*s + 8*s**2)
        + p*(r*(4*k**2*s - 2*k*s - 48*s**4 + 18*s**2 + 16*s) + 12*k*s**2
             - 24*r**3*s**2 + r**2*(60*s**3 - 12*s) + 12*s**5 - 6*s**3 - 8*s**2)
        + 4*k**2*s**2 + r*(6*k*s - 16*s**4 + 6*s**2 + 7*s) + 2*k*s**2 - 8*r**3*s**2
        + r**2*(20*s**3 - 4*s) + 4*s**5 - 2*s**3 - 4*s**2
    )


def _E3_t3(r, s, k, p):
    return (
        p*r*(4*k**2*r*s + 10*k*r*s - 12*k*s**2 - 16*r**3*s**2 + 40*r**2*s**3
             - 8*r**2*s - 32*r*s**4 + 12*r*s**2 + 22*r*s + 8*s**5 - 4*s**3 - 24*s**2)
        + r*(4*k**2*r*s - 4*k**2*s**2 + 12*k*r*s - 10*k*s**2 - 12*r**3*s**2
             + 2*r**3*s + 30*r**2*s**3 - 3*r**2*s**2 - 8*r**2*s - 24*r*s**4 + r*s**3
             + 12*r*s**2 + 11*r*s - r + 6*s**5 - 4*s**3 - 10*s**2)
        + p**2*r*(4*k*r*s + 4*r*s - 8*s**2)
    )


def _E3_t4(r, s, k, p):
    return (
        p*r*(4*k**2*r*s + 10*k*r*s - 4*k*s**2 - 16*r**3*s**2 + 40*r**2*s**3
             - 8*r**2*s - 32*r*s**4 + 12*r*s**2 + 10*r*s + 8*s**5 - 4*s**3 - 24*s**2)
        + r*(4*k**2*r*s + 6*k*r*s - 4*k*s**2 - 12*r**3*s**2 + 2*r**3*s
             + 30*r**2*s**3 - 3*r**2*s**2 - 8*r**2*s - 24*r*s**4 + r*s**3
             + 12*r*s**2 + 2*r*s - r + 6*s**5 - 4*s**3 - 10*s**2)
        + p**2*r*(4*k*r*s + 4*r*s - 8*s**2)
    )


# id -> (expression, extra factor inside the expression beyond the base scale)
FAMILIES = {
    "C": {
        "C0_t4prev": (_C0, 1),
        "C1_t1": (_C1, 1),
        "C2_t2": (_C2, 1),
        "C3_t3": (_C3, 1),
    },
    "D": {
        "D0_t1": (_D0_t1, 1),
        "D1_t1": (_D1_t1, 1),
        "D1_vertex": (_D1_vertex, 1),
        "D2_t2": (_D2_t2, 1),
        "D3_t3": (_D3_t3, "r"),
        "D3_t4": (_D3_t4, "r"),
    },
    "E": {
        "E0_t1": (_E0_t1, 1),
        "E1_t1": (_E1_t1, 1),
        "E1_vertex": (_E1_vertex, 1),
        "E2_t2": (_E2_t2, 1),
        "E3_t3": (_E3_t3, "r"),
        "E3_t4": (_E3_t4, "r"),
    },
}


def _D0_n(r, s, k, n, p):
    return (
        -4*n*p*s - 6*p*r*s - 2*k*p*r*s + 4*k**2*p*r*s + 12*k*p**2*r*s + 8*p**3*r*s
        + 4*k*p*s**2
        - 2*p*(4*s**2 + 4*r**3*s**2 - 2*s**3 + 4*s**5 + r**2*(2*s - 4*s**3)
               + r*(-4*s - 4*s**4))
    )


def _D1_n(r, s, k, n, p):
    return (
        n**2 - 2 + 2*r + p**2*r**2 + 4*k*p**2*r**2 + 4*k**2*p**2*r**2 + 4*p**3*r**2
        + 8*k*p**3*r**2 + 4*p**4*r**2 + 2*s - 6*p*r*s - 2*k*p*r*s + 4*k**2*p*r*s
        - 4*p**2*r*s + 4*k*p**2*r*s - 2*s**2 + 4*k*p*s**2 + 4*p**2*s**2 + 2*s**3
        - 2*s**5 - p*r*(2*r + s) - 2*k*p*r*(2*r + s) - 2*p**2*r*(2*r + s)
        + 2*p*s*(2*r + s) + n*(2*r - 2*p*r - 4*k*p*r - 4*p**2*r + s)
        - r**3*(-s + 2*s**2) - r**2*(2*s - 2*s**3) - r*(-1 - 2*s + s**3 - 2*s**4)
        - 2*p*(4*s**2 + 4*r**3*s**2 - 2*s**3 + 4*s**5 + r**2*(2*s - 4*s**3)
               + r*(-4*s - 4*s**4))
    )


def _D2_n(r, s, k, n, p):
    return (
        6*r*s + 4*k*r*s + 8*p*r*s - 10*k*p*r*s - 4*k**2*p*r*s - 12*p**2*r*s
        - 12*k*p**2*r*s - 8*p**3*r*s - 2*r**2*s - 4*p*r**2*s - 4*s**2 - 2*k*s**2
        - 4*k**2*s**2 - 8*p*s**2 - 4*k*p*s**2 - 4*r**3*s**2 - 8*p*r**3*s**2
        + 2*s**3 + 4*p*s**3 + 4*r**2*s**3 + 8*p*r**2*s**3 + 4*r*s**4 + 8*p*r*s**4
        - 4*s**5 - 8*p*s**5 + n*(2*s + 4*k*s + 4*p*s)
    )


def _D3_n(r, s, k, n, p):
    return (
        -n**2 - 2*r + r**2 - k**2*r**2 - 6*k*p*r**2 - 4*k**2*p*r**2 - 9*p**2*r**2
        - 16*k*p**2*r**2 - 4*k**2*p**2*r**2 - 12*p**3*r**2 - 8*k*p**3*r**2
        - 4*p**4*r**2 + 7*r*s + 7*k*r*s + 17*p*r*s - 4*k**2*p*r*s + 6*p**2*r*s
        - 4*k*p**2*r*s - 2*r**2*s - 4*p*r**2*s - 8*s**2 - 2*k*s**2 - 4*k**2*s**2
        - 14*p*s**2 - 4*k*p*s**2 - 4*p**2*s**2 - 4*r**3*s**2 - 8*p*r**3*s**2
        + 4*s**3 + 4*p*s**3 + 4*r**2*s**3 + 8*p*r**2*s**3 + 4*r*s**4 + 8*p*r*s**4
        - 6*s**5 - 8*p*s**5
        + n*(2*k*r + 6*p*r + 4*k*p*r + 4*p**2*r - s + 4*k*s)
        - r**3*(-s + 2*s**2) - r**2*(2*s - 2*s**3) - r*(-1 - 2*s + s**3 - 2*s**4)
    )


def _E0_n(r, s, k, n, p):
    return (
        -4*n*p*s - 8*p*r*s - 2*k*p*r*s + 4*k**2*p*r*s + 12*k*p**2*r*s + 8*p**3*r*s
        + 4*p*s**2 + 4*k*p*s**2
        - 2*p*(4*s**2 + 8*r**3*s**2 + 2*s**3 - 4*s**5 + r**2*(4*s - 20*s**3)
               + r*(-4*s - 6*s**2 + 16*s**4))
    )


def _E1_n(r, s, k, n, p):
    return (
        -2 + n**2 + 3*r + p**2*r**2 + 4*k*p**2*r**2 + 4*k**2*p**2*r**2 + 4*p**3*r**2
        + 8*k*p**3*r**2 + 4*p**4*r**2 - p*r*(3*r - s) - 2*k*p*r*(3*r - s)
        - 2*p**2*r*(3*r - s) + n*(3*r - 2*p*r - 4*k*p*r - 4*p**2*r - s) - 2*s
        - 4*p**2*r*s - 8*k*p**2*r*s - 8*p**3*r*s + 2*p*(3*r - s)*s - 2*s**2
        + 4*p**2*s**2 - 2*s**3 + 2*s**5
        + 2*p*s*(-4*r - k*r + 2*k**2*r + 6*k*p*r + 4*p**2*r + 2*s + 2*k*s)
        - r**3*(-2*s + 4*s**2) - r**2*(4*s + 3*s**2 - 10*s**3)
        - r*(-2 - 2*s - 6*s**2 - s**3 + 8*s**4)
        - 2*p*(4*s**2 + 8*r**3*s**2 + 2*s**3 - 4*s**5 + r**2*(4*s - 20*s**3)
               + r*(-4*s - 6*s**2 + 16*s**4))
    )


def _E2_n(r, s, k, n, p):
    return (
        7*r*s + 6*k*r*s + 10*p*r*s - 10*k*p*r*s - 4*k**2*p*r*s - 12*p**2*r*s
        - 12*k*p**2*r*s - 8*p**3*r*s - 4*r**2*s - 8*p*r**2*s - 6*s**2 - 6*k*s**2
        - 4*k**2*s**2 - 12*p*s**2 - 4*k*p*s**2 + 6*r*s**2 + 12*p*r*s**2
        - 8*r**3*s**2 - 16*p*r**3*s**2 - 2*s**3 - 4*p*s**3 + 20*r**2*s**3
        + 40*p*r**2*s**3 - 16*r*s**4 - 32*p*r*s**4 + 4*s**5 + 8*p*s**5
        + n*(2*s + 4*k*s + 4*p*s)
    )


def _E3_n(r, s, k, n, p):
    return (
        -n**2 - 3*r + 2*r**2 + k*r**2 - k**2*r**2 + 3*p*r**2 - 4*k*p*r**2
        - 4*k**2*p*r**2 - 7*p**2*r**2 - 16*k*p**2*r**2 - 4*k**2*p**2*r**2
        - 12*p**3*r**2 - 8*k*p**3*r**2 - 4*p**4*r**2 + 5*r*s + 7*k*r*s + 13*p*r*s
        - 4*k*p*r*s - 4*k**2*p*r*s + 2*p**2*r*s - 4*k*p**2*r*s - 4*r**2*s
        - 8*p*r**2*s - 8*s**2 - 6*k*s**2 - 4*k**2*s**2 - 18*p*s**2 - 4*k*p*s**2
        - 4*p**2*s**2 + 6*r*s**2 + 12*p*r*s**2 - 8*r**3*s**2 - 16*p*r**3*s**2
        - 4*s**3 - 4*p*s**3 + 20*r**2*s**3 + 40*p*r**2*s**3 - 16*r*s**4
        - 32*p*r*s**4 + 6*s**5 + 8*p*s**5
        + n*(-r + 2*k*r + 6*p*r + 4*k*p*r + 4*p**2*r + s + 4*k*s)
        - r**3*(-2*s + 4*s**2) - r**2*(4*s + 3*s**2 - 10*s**3)
        - r*(-2 - 2*s - 6*s**2 - s**3 + 8*s**4)
    )


# lower-bound expressions in (n, p), indexed by block piece 0..3
N_FORMS = {
    "D": (_D0_n, _D1_n, _D2_n, _D3_n),
    "E": (_E0_n, _E1_n, _E2_n, _E3_n),
}


# printed worked example at (r, s) = (9, 2), as functions of (k, p)
EXAMPLE_D_9_2 = {
    "D0_t1": lambda k, p: (72*k - 40)*p**2 + (72*k**2 - 20*k - 8984)*p,
    "D1_t1": lambda k, p: (72*k - 56)*p**2 + (72*k**2 - 20*k - 17780)*p - 3277,
    "D1_vertex": lambda k, p: (72*k - 40)*p**2 + (72*k**2 - 20*k - 17860)*p - 3177,
    "D2_t2": lambda k, p: (72*k - 40)*p**2 + (72*k**2 + 12*k - 17684)*p + 16*k**2 + 96*k - 8832,
    "D3_t3": lambda k, p: (72*k + 40)*p**2 + (72*k**2 + 132*k - 17604)*p + 56*k**2 + 156*k - 12027,
    "D3_t4": lambda k, p: (72*k + 40)*p**2 + (72*k**2 + 164*k - 17780)*p + 72*k**2 + 92*k - 12159,
}

# printed worked example at (r, s) = (2, 1)
EXAMPLE_E_2_1 = {
    "E0_t1": lambda k, p: (-40 + 8*k**2)*p + 8*k*p**2,
    "E1_t1": lambda k, p: 2 + (-40 + 8*k**2)*p + 8*k*p**2,
    "E1_vertex": lambda k, p: -Fraction(17, 4) + (-30 + 8*k**2)*p + (-4 + 8*k)*p**2,
    "E2_t2": lambda k, p: -8 + 14*k + 4*k**2 + (-16 + 8*k + 8*k**2)*p + 8*k*p**2,
    "E3_t3": lambda k, p: -14 + 14*k + 4*k**2 + (-16 + 8*k + 8*k**2)*p + 8*k*p**2,
    "E3_t4": lambda k, p: -32 + 8*k + 8*k**2 + (-40 + 16*k + 8*k**2)*p + 8*k*p**2,
}
