"""
Stable rule identifiers for classification verdicts.
Every report embeds the id together with its fixed explanation.
"""

# --- Degree form ---
RULE_DEGREE_BELOW_EIGHT = "degree-below-eight"
RULE_DEGREE_EIGHT = "degree-eight"
RULE_DEGREE_NINE = "degree-nine-needs-bundle"

# --- Bundle form ---
RULE_BOUNDARY_NOT_FIBER = "boundary-not-fiber"
RULE_CONE_NOT_GENERATED = "cone-not-generated"
RULE_ANTICANONICAL = "anticanonical-coefficients"
RULE_SYNTHESIZED = "synthesized"

RULE_TEXTS = {
    RULE_DEGREE_BELOW_EIGHT: (
        "A del Pezzo fibration over a curve with a Ga^3-structure has degree at least 8; "
        "degrees 1 to 7 never admit one."
    ),
    RULE_DEGREE_EIGHT: (
        "A del Pezzo fibration of degree 8 never admits a Ga^3-structure; the degree must be 9."
    ),
    RULE_DEGREE_NINE: (
        "Degree 9 means X is a P^2-bundle over P^1. A Ga^3-structure exists exactly when the "
        "boundary is a section-type divisor of class xi plus one fiber; a certificate needs the "
        "bundle and its boundary."
    ),
    RULE_BOUNDARY_NOT_FIBER: (
        "One boundary component must be a fiber of X -> P^1, stable under the action; "
        "the second component given is not of class F."
    ),
    RULE_CONE_NOT_GENERATED: (
        "Boundary components of a Ga^n-variety generate the effective cone; "
        "for F(-d1,-d2,0) that cone is spanned by xi and F only."
    ),
    RULE_ANTICANONICAL: (
        "-K must be an integral combination of the boundary components with every coefficient at least 2."
    ),
    RULE_SYNTHESIZED: (
        "Boundary (xi, F): a Ga^3-structure is built from P^1 x P^2 by elementary links "
        "and every step is certified."
    ),
}

# Verbatim statements each verdict rests on, embedded in every report.
RULE_CITATIONS = {
    RULE_DEGREE_BELOW_EIGHT: r"It holds that $d \geq 8$",
    RULE_DEGREE_EIGHT: r"It holds that $d \neq 8$",
    RULE_DEGREE_NINE: r"f is a $\P^{2}$-bundle when the degree is nine",
    RULE_BOUNDARY_NOT_FIBER: r"so does $P'$ with the boundary divisor $H_{P'} \cup p'^{*}(\infty)$",
    RULE_CONE_NOT_GENERATED: r"generate the cone of effective Cartier divisors",
    RULE_ANTICANONICAL: r"$a_{1}D_{1}|_{D_{2}} \sim -K_{X}|_{D_{2}} \sim -K_{D_{2}} \sim \mathcal{O}_{\P^{2}}(3)$",
    RULE_SYNTHESIZED: r"Thus $\rho$ induces a desired $\mathbb{G}_{a}^{3}$-structure on $X$",
}


def cited_text(rule_id: str) -> str:
    """Explanation followed by the quoted statement it rests on."""
    return f'{RULE_TEXTS[rule_id]} Cited: "{RULE_CITATIONS[rule_id]}".'
