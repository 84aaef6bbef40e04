//! The five structural identities of the link/costar/star/join calculus,
//! packaged as an exhaustive checker over all faces of a pair of complexes.
//! Used by the `verify calculus-identities` command and the property suites.

use crate::complex::Complex;

/// Result of one identity family on a given input.
#[derive(Clone, Debug)]
pub struct IdentityResult {
    pub name: &'static str,
    pub pass: bool,
    /// First witness of failure, as a human-readable description.
    pub witness: Option<String>,
}

/// Full report: all five families, checked exhaustively over faces.
#[derive(Clone, Debug)]
pub struct CalculusReport {
    pub results: Vec<IdentityResult>,
}

impl CalculusReport {
    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

/// Join of two complexes on vertex sets that are already disjoint, keeping
/// the original ids (no offsetting).  Void absorbs.
fn join_disjoint(a: &Complex, b: &Complex) -> Complex {
    if a.is_void() || b.is_void() {
        return Complex::void();
    }
    debug_assert!(a.vertices().is_disjoint(&b.vertices()));
    let mut gens = Vec::new();
    for fa in &a.facets() {
        for fb in &b.facets() {
            gens.push(fa.union(fb));
        }
    }
    Complex::from_facets(&gens)
}

fn fail(name: &'static str, witness: String) -> IdentityResult {
    IdentityResult { name, pass: false, witness: Some(witness) }
}

fn ok(name: &'static str) -> IdentityResult {
    IdentityResult { name, pass: true, witness: None }
}

/// Identity 1: nested links collapse, `Lk_{Lk_a σ} τ = Lk_a (σ∪τ)` for every
/// face σ of `a` and every face τ of the link.
fn nested_links(a: &Complex) -> IdentityResult {
    const NAME: &str = "nested-links";
    for sigma in a.faces() {
        let lk = a.link(sigma);
        for tau in lk.faces() {
            if lk.link(tau) != a.link(&sigma.union(tau)) {
                return fail(NAME, format!("sigma={sigma}, tau={tau}"));
            }
        }
    }
    ok(NAME)
}

/// Identity 2: costar laws — `cost(δ₁∪δ₂) = cost δ₁ ∪ cost δ₂` and the
/// nested form `cost_{cost δ₁} δ₂ = cost δ₁ ∩ cost δ₂`, over all face pairs.
fn costar_laws(a: &Complex) -> IdentityResult {
    const NAME: &str = "costar-laws";
    for d1 in a.faces() {
        let c1 = a.costar(d1);
        for d2 in a.faces() {
            let c2 = a.costar(d2);
            if a.costar(&d1.union(d2)) != c1.union(&c2) {
                return fail(NAME, format!("union law at d1={d1}, d2={d2}"));
            }
            if c1.costar(d2) != c1.intersection(&c2) {
                return fail(NAME, format!("nested law at d1={d1}, d2={d2}"));
            }
        }
    }
    ok(NAME)
}

/// Identity 3: links distribute over union and intersection of complexes
/// (with `Lk_Γ σ = Void` when σ ∉ Γ).
fn link_distributes(a: &Complex, b: &Complex) -> IdentityResult {
    const NAME: &str = "link-distributes";
    let u = a.union(b);
    let i = a.intersection(b);
    for sigma in u.faces() {
        if u.link(sigma) != a.link(sigma).union(&b.link(sigma)) {
            return fail(NAME, format!("union side at sigma={sigma}"));
        }
        if i.link(sigma) != a.link(sigma).intersection(&b.link(sigma)) {
            return fail(NAME, format!("intersection side at sigma={sigma}"));
        }
    }
    ok(NAME)
}

/// Identity 4: `st̄ σ ∩ cost σ = σ̇ ∗ Lk σ` — the closed star meets the
/// costar in the simplex boundary joined with the link.
fn star_costar(a: &Complex) -> IdentityResult {
    const NAME: &str = "star-costar";
    for sigma in a.faces() {
        let lhs = a.star_closed(sigma).intersection(&a.costar(sigma));
        let rhs = join_disjoint(&sigma.boundary_complex(), &a.link(sigma));
        if lhs != rhs {
            return fail(NAME, format!("sigma={sigma}"));
        }
    }
    ok(NAME)
}

/// Identity 5: links of a join factor through the factors,
/// `Lk_{a∗b}(σ₁∪σ₂) = (Lk_a σ₁) ∗ (Lk_b σ₂)`, with the right factor offset
/// consistently with the ambient join.
fn join_links(a: &Complex, b: &Complex) -> IdentityResult {
    const NAME: &str = "join-links";
    if a.is_void() || b.is_void() {
        return ok(NAME);
    }
    let (join, off) = a.join_with_offset(b);
    for s1 in a.faces() {
        for s2 in b.faces() {
            let sigma = s1.union(&s2.map_vertices(|v| v + off));
            let lhs = join.link(&sigma);
            let lk1 = a.link(s1);
            let lk2 = b.link(s2);
            let rhs = if lk1.is_void() || lk2.is_void() {
                Complex::void()
            } else {
                lk1.join_using_offset(&lk2, off)
            };
            if lhs != rhs {
                return fail(NAME, format!("s1={s1}, s2={s2}"));
            }
        }
    }
    ok(NAME)
}

/// Check all five identity families on the pair `(a, b)`.  The single-complex
/// identities are checked on `a`; the two-complex ones use both.
pub fn check_identities(a: &Complex, b: &Complex) -> CalculusReport {
    CalculusReport {
        results: vec![
            nested_links(a),
            costar_laws(a),
            link_distributes(a, b),
            star_costar(a),
            join_links(a, b),
        ],
    }
}
