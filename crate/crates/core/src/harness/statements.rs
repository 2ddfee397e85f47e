//! The registry: one entry per statement, each with an instance generator
//! and a check.

use num_traits::{One, Zero};

use super::random::{Purity, RandomSpec, Sampler};
use super::{Instance, Verdict};
use crate::automorphism::{mu_sqrt3, tau_sqrt3, Sqrt3Element};
use crate::classification::{
    is_alternative, is_normed_set, is_strongly_alternative, normed_with, pure_parts_dependent,
    strongly_alternates_with, alternates_with, yui_witness,
};
use crate::element::{associator, basis, dim_of, half_of, CDElement};
use crate::error::{AlgebraError, Result};
use crate::operators::check_lemma_3_2;
use crate::rational::{self, Rational};
use crate::structure_maps::{
    check_span_hypotheses, h_a_elements, octonion_span, projection_split, quaternion_span, SubalgebraBasis,
};

/// Basis enumerations over pairs are included up to this level.
const EXHAUSTIVE_PAIR_LEVEL: u32 = 4;

pub(crate) struct Statement {
    pub id: &'static str,
    pub min_level: u32,
    pub generate: fn(&RandomSpec, &mut Sampler) -> Vec<Instance>,
    pub check: fn(&Instance) -> Result<Verdict>,
}

pub(crate) static REGISTRY: &[Statement] = &[
    Statement { id: "flexibility", min_level: 0, generate: gen_flexibility, check: check_flexibility },
    Statement { id: "lemma_1_1", min_level: 2, generate: gen_lemma_1_1, check: check_lemma_1_1 },
    Statement { id: "corollary_1_2", min_level: 2, generate: gen_corollary_1_2, check: check_corollary_1_2 },
    Statement { id: "corollary_1_3", min_level: 3, generate: gen_corollary_1_3, check: check_corollary_1_3 },
    Statement { id: "proposition_1_4", min_level: 3, generate: gen_proposition_1_4, check: check_proposition_1_4 },
    Statement { id: "corollary_1_5", min_level: 3, generate: gen_h_a_split, check: check_corollary_1_5 },
    Statement { id: "lemma_1_6", min_level: 3, generate: gen_lemma_1_6, check: check_lemma_1_6 },
    Statement { id: "lemma_2_1", min_level: 4, generate: gen_lemma_2_1, check: check_lemma_2_1 },
    Statement { id: "yui_2_3", min_level: 4, generate: gen_yui, check: check_yui },
    Statement { id: "proposition_3_1", min_level: 4, generate: gen_proposition_3_1, check: check_proposition_3_1 },
    Statement { id: "lemma_3_2", min_level: 3, generate: gen_lemma_3_2, check: check_lemma_3_2_instance },
    Statement { id: "theorem_3_3", min_level: 3, generate: gen_theorem_3_3, check: check_theorem_3_3 },
    Statement { id: "lemma_4_1", min_level: 3, generate: gen_lemma_4_1, check: check_lemma_4_1 },
    Statement { id: "theorem_4_2", min_level: 4, generate: gen_theorem_4_2, check: check_theorem_4_2 },
    Statement { id: "corollary_4_3", min_level: 4, generate: gen_corollary_4_3, check: check_corollary_4_3 },
    Statement { id: "theorem_5_1", min_level: 4, generate: gen_theorem_5_1, check: check_theorem_5_1 },
    Statement { id: "theorem_5_2", min_level: 4, generate: gen_pure_pairs, check: check_theorem_5_2 },
    Statement { id: "implication_chain", min_level: 4, generate: gen_pure_pairs, check: check_implication_chain },
];

pub(crate) fn lookup(id: &str) -> Option<&'static Statement> {
    REGISTRY.iter().find(|s| s.id == id)
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Fails(detail())
    }
}

fn hypothesis(msg: &str) -> AlgebraError {
    AlgebraError::Hypothesis(msg.to_string())
}

fn indices(level: u32, purity: Purity) -> Vec<usize> {
    let h = if level == 0 { usize::MAX } else { half_of(level) };
    (0..dim_of(level))
        .filter(|&i| match purity {
            Purity::Any => true,
            Purity::Pure => i != 0,
            Purity::DoublyPure => i != 0 && i != h,
        })
        .collect()
}

fn basis_pairs(level: u32, left: Purity, right: Purity, names: (&str, &str)) -> Vec<Instance> {
    if level > EXHAUSTIVE_PAIR_LEVEL {
        return Vec::new();
    }
    let mut out = Vec::new();
    for &i in &indices(level, left) {
        for &j in &indices(level, right) {
            out.push(Instance::of(&[(names.0, &basis(level, i)), (names.1, &basis(level, j))]).label("kind", "basis"));
        }
    }
    out
}

/// `x` with its component along `v` removed.
fn orthogonalize(x: &CDElement, v: &CDElement) -> CDElement {
    if v.is_zero() {
        return x.clone();
    }
    let t = x.dot(v).expect("same level") / v.norm_sq();
    x.sub(&v.scale(&t)).expect("same level")
}

/// `(inside H_a, inside H_a^perp)` parts of `x`, for nonzero doubly pure `a`.
fn h_a_split(a: &CDElement, x: &CDElement) -> Result<(CDElement, CDElement)> {
    projection_split(x, &h_a_elements(a)?)
}

fn in_h_a(s: &mut Sampler, a: &CDElement) -> CDElement {
    let (p, q) = (s.rational(), s.rational());
    a.scale(&p).add(&a.tilde().expect("level >= 1").scale(&q)).expect("same level")
}

fn perp_h_a(s: &mut Sampler, a: &CDElement, purity: Purity) -> CDElement {
    let x = s.mixed(a.level(), purity);
    h_a_split(a, &x).expect("doubly pure nonzero a").1
}

// flexibility

fn gen_flexibility(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::Any, Purity::Any, ("x", "y"));
    for _ in 0..spec.trials {
        let (x, y) = (s.element(n, Purity::Any), s.element(n, Purity::Any));
        out.push(Instance::of(&[("x", &x), ("y", &y)]).label("kind", "random"));
    }
    out
}

fn check_flexibility(inst: &Instance) -> Result<Verdict> {
    let (x, y) = (inst.get("x")?, inst.get("y")?);
    let a = associator(x, y, x)?;
    Ok(verdict(a.is_zero(), || format!("(x, y, x) = {a}")))
}

// lemma 1.1

fn gen_lemma_1_1(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::Any, Purity::DoublyPure, ("a", "x"));
    for _ in 0..spec.trials {
        let a = s.mixed(n, Purity::Any);
        let x = s.mixed(n, Purity::DoublyPure);
        out.push(Instance::of(&[("a", &a), ("x", &x)]).label("kind", "random"));
    }
    out
}

fn check_lemma_1_1(inst: &Instance) -> Result<Verdict> {
    let (a, x) = (inst.get("a")?, inst.get("x")?);
    if !x.is_doubly_pure() {
        return Err(hypothesis("x is not doubly pure"));
    }
    let lhs = a.tilde()?.multiply(x)?;
    let rhs = a.multiply(x)?.tilde()?.neg();
    Ok(verdict(lhs == rhs, || format!("ã x = {lhs} but -(a x)~ = {rhs}")))
}

// corollary 1.2

/// Doubly pure zero divisors `a x = 0` among signed two-term sums with
/// indices below 16.
fn zero_divisor_pairs(level: u32, limit: usize) -> Vec<(CDElement, CDElement)> {
    if level < 4 {
        return Vec::new();
    }
    let h = half_of(level);
    let idx: Vec<usize> = (1..16).filter(|&i| i != h).collect();
    let mut sums = Vec::new();
    for (p, &i) in idx.iter().enumerate() {
        for &j in &idx[p + 1..] {
            for sign in [1i64, -1] {
                let t = [(i, rational::one()), (j, rational::int(sign))];
                sums.push(CDElement::from_terms(level, &t).expect("in range"));
            }
        }
    }
    let mut out = Vec::new();
    'outer: for a in &sums {
        for x in &sums {
            if (a * x).is_zero() {
                out.push((a.clone(), x.clone()));
                if out.len() == limit {
                    break 'outer;
                }
                break;
            }
        }
    }
    out
}

fn gen_corollary_1_2(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::DoublyPure, Purity::DoublyPure, ("a", "x"));
    for (a, x) in zero_divisor_pairs(n, 8) {
        out.push(Instance::of(&[("a", &a), ("x", &x)]).label("kind", "zero_divisor"));
    }
    for t in 0..spec.trials {
        let a = s.mixed(n, Purity::DoublyPure);
        let x = s.mixed(n, Purity::DoublyPure);
        let (x, kind) = match t % 4 {
            0 => (x, "random"),
            1 => (orthogonalize(&x, &a), "perp_a"),
            2 => (orthogonalize(&x, &a.tilde().expect("level >= 2")), "perp_tilde_a"),
            _ if n >= 3 => (h_a_split(&a, &x).expect("nonzero doubly pure").1, "perp_h_a"),
            _ => (x, "random"),
        };
        out.push(Instance::of(&[("a", &a), ("x", &x)]).label("kind", kind));
    }
    out
}

fn check_corollary_1_2(inst: &Instance) -> Result<Verdict> {
    let (a, x) = (inst.get("a")?, inst.get("x")?);
    if !a.is_doubly_pure() || !x.is_doubly_pure() {
        return Err(hypothesis("a and x must be doubly pure"));
    }
    let (at, xt) = (a.tilde()?, x.tilde()?);
    let one = at.multiply(x)?.add(&xt.multiply(a)?)?.is_zero();
    if one != a.dot(x)?.is_zero() {
        return Ok(Verdict::Fails(format!("part 1: ãx + x̃a = 0 is {one} but a ⊥ x is {}", !one)));
    }
    let two = a.multiply(x)?.sub(&xt.multiply(&at)?)?.is_zero();
    if two != at.dot(x)?.is_zero() {
        return Ok(Verdict::Fails(format!("part 2: ax - x̃ã = 0 is {two} but ã ⊥ x is {}", !two)));
    }
    let three = at.multiply(x)?.is_zero();
    let ax = a.multiply(x)?.is_zero();
    Ok(verdict(three == ax, || format!("part 3: ãx = 0 is {three} but ax = 0 is {ax}")))
}

// corollary 1.3

fn gen_corollary_1_3(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = Vec::new();
    if n <= 5 {
        for i in indices(n, Purity::DoublyPure) {
            out.push(Instance::of(&[("a", &basis(n, i))]).label("kind", "basis"));
        }
    }
    for t in 0..spec.trials {
        let (a, kind) = if t % 3 == 2 {
            (s.mixed(n, Purity::DoublyPure), "random")
        } else {
            (s.unit(n, Purity::DoublyPure, 4), "unit")
        };
        out.push(Instance::of(&[("a", &a)]).label("kind", kind));
    }
    out
}

fn check_corollary_1_3(inst: &Instance) -> Result<Verdict> {
    let a = inst.get("a")?;
    if a.is_zero() || !a.is_doubly_pure() {
        return Err(hypothesis("a must be nonzero and doubly pure"));
    }
    // Rescale when the norm is rational; otherwise check closure and
    // associativity of the unnormalized span.
    let unit = rational::sqrt_exact(&a.norm_sq()).map(|r| a.scale(&r.recip()));
    let b = SubalgebraBasis::new(h_a_elements(unit.as_ref().unwrap_or(a))?)?;
    if !b.closed {
        return Ok(Verdict::Fails("H_a is not closed under multiplication".into()));
    }
    for u in &b.elements {
        for v in &b.elements {
            for w in &b.elements {
                if !associator(u, v, w)?.is_zero() {
                    return Ok(Verdict::Fails(format!("({u}, {v}, {w}) != 0 in H_a")));
                }
            }
        }
    }
    Ok(verdict(unit.is_none() || b.matches_level(2), || "H_a table differs from the quaternion table".into()))
}

// proposition 1.4

fn gen_proposition_1_4(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::DoublyPure, Purity::DoublyPure, ("a", "b"));
    for t in 0..spec.trials {
        let a = s.mixed(n, Purity::DoublyPure);
        let (b, kind) = match t % 4 {
            0 => (s.mixed(n, Purity::DoublyPure), "random"),
            1 => (perp_h_a(s, &a, Purity::DoublyPure), "perp_h_a"),
            2 => (in_h_a(s, &a), "in_h_a"),
            _ => {
                let inside = in_h_a(s, &a);
                (inside.add(&perp_h_a(s, &a, Purity::DoublyPure)).expect("same level"), "mixed")
            }
        };
        out.push(Instance::of(&[("a", &a), ("b", &b)]).label("kind", kind));
    }
    out
}

fn check_proposition_1_4(inst: &Instance) -> Result<Verdict> {
    let (a, b) = (inst.get("a")?, inst.get("b")?);
    if !a.is_doubly_pure() || !b.is_doubly_pure() {
        return Err(hypothesis("a and b must be doubly pure"));
    }
    let n = a.level();
    let at = a.tilde()?;
    let lhs = at.multiply(b)? == a.multiply(&b.tilde()?)?;
    let rhs = a.dot(b)?.is_zero() && at.dot(b)?.is_zero();
    if lhs != rhs {
        return Ok(Verdict::Fails(format!("part 1: ãb = ab̃ is {lhs} but a, ã ⊥ b is {rhs}")));
    }
    let e0t = CDElement::tilde_unit(n)?;
    if associator(a, &e0t, b)?.is_zero() {
        let ab = a.multiply(b)?;
        let h = half_of(n);
        let ok = ab.support().all(|i| i == 0 || i == h);
        return Ok(verdict(ok, || format!("part 2: (a, ẽ0, b) = 0 but ab = {ab}")));
    }
    Ok(Verdict::Holds)
}

// corollary 1.5

fn gen_h_a_split(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::DoublyPure, Purity::DoublyPure, ("a", "b"));
    for t in 0..spec.trials {
        let a = s.mixed(n, Purity::DoublyPure);
        let (b, kind) = if t % 2 == 0 {
            (in_h_a(s, &a), "in_h_a")
        } else {
            (perp_h_a(s, &a, Purity::DoublyPure), "perp_h_a")
        };
        out.push(Instance::of(&[("a", &a), ("b", &b)]).label("kind", kind));
    }
    out
}

fn check_corollary_1_5(inst: &Instance) -> Result<Verdict> {
    let (a, b) = (inst.get("a")?, inst.get("b")?);
    if a.is_zero() || !a.is_doubly_pure() || !b.is_doubly_pure() {
        return Err(hypothesis("a must be nonzero and doubly pure, b doubly pure"));
    }
    let e0t = CDElement::tilde_unit(a.level())?;
    let left = associator(&e0t, a, b)?.neg();
    let mid = associator(a, &e0t, b)?;
    if left != mid {
        return Ok(Verdict::Fails(format!("-(ẽ0, a, b) = {left} but (a, ẽ0, b) = {mid}")));
    }
    let (inside, outside) = h_a_split(a, b)?;
    if outside.is_zero() {
        Ok(verdict(mid.is_zero(), || format!("b in H_a but (a, ẽ0, b) = {mid}")))
    } else if inside.is_zero() {
        let expected = a.tilde()?.multiply(b)?.scale(&rational::int(2));
        Ok(verdict(mid == expected, || format!("b in H_a^perp but (a, ẽ0, b) = {mid}, 2ãb = {expected}")))
    } else {
        Err(hypothesis("b lies in neither H_a nor its complement"))
    }
}

// lemma 1.6

fn gen_lemma_1_6(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::DoublyPure, Purity::Any, ("a", "x"));
    for t in 0..spec.trials {
        let a = s.mixed(n, Purity::DoublyPure);
        let x = s.mixed(n, Purity::Any);
        let (inside, outside) = h_a_split(&a, &x).expect("nonzero doubly pure");
        let (x, kind) = if t % 2 == 0 { (inside, "in_h_a") } else { (outside, "perp_h_a") };
        out.push(Instance::of(&[("a", &a), ("x", &x)]).label("kind", kind));
    }
    out
}

fn check_lemma_1_6(inst: &Instance) -> Result<Verdict> {
    let (a, x) = (inst.get("a")?, inst.get("x")?);
    if a.is_zero() || !a.is_doubly_pure() {
        return Err(hypothesis("a must be nonzero and doubly pure"));
    }
    let value = associator(&a.tilde()?, x, a)?;
    let (inside, outside) = h_a_split(a, x)?;
    if outside.is_zero() {
        Ok(verdict(value.is_zero(), || format!("x in H_a but (ã, x, a) = {value}")))
    } else if inside.is_zero() {
        let expected = a.multiply(&a.multiply(&x.tilde()?)?)?.scale(&rational::int(-2));
        Ok(verdict(value == expected, || format!("x in H_a^perp but (ã, x, a) = {value}, -2a(ax̃) = {expected}")))
    } else {
        Err(hypothesis("x lies in neither H_a nor its complement"))
    }
}

// lemma 2.1, checked as: every nonzero doubly pure a has some projection
// of a basis element onto H_a^perp that it does not annihilate.

fn gen_lemma_2_1(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = Vec::new();
    if n <= 5 {
        for i in indices(n, Purity::DoublyPure) {
            out.push(Instance::of(&[("a", &basis(n, i))]).label("kind", "basis"));
        }
    }
    for (a, _) in zero_divisor_pairs(n, 8) {
        out.push(Instance::of(&[("a", &a)]).label("kind", "zero_divisor"));
    }
    for t in 0..spec.trials {
        let a = if t % 2 == 0 { s.mixed(n, Purity::DoublyPure) } else { s.unit(n, Purity::DoublyPure, 3) };
        out.push(Instance::of(&[("a", &a)]).label("kind", "random"));
    }
    out
}

fn check_lemma_2_1(inst: &Instance) -> Result<Verdict> {
    let a = inst.get("a")?;
    if a.is_zero() || !a.is_doubly_pure() {
        return Err(hypothesis("a must be nonzero and doubly pure"));
    }
    let h = h_a_elements(a)?;
    for i in 0..a.dim() {
        let (_, x) = projection_split(&basis(a.level(), i), &h)?;
        if !a.multiply(&x)?.is_zero() {
            return Ok(Verdict::Holds);
        }
    }
    Ok(Verdict::Fails("a annihilates H_a^perp".into()))
}

// theorems 2.2 / 2.3

fn gen_yui(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::Any, Purity::Any, ("a", "b"));
    for t in 0..spec.trials {
        let (a, b, kind) = match t % 5 {
            0 => (s.mixed(n, Purity::Pure), s.mixed(n, Purity::Pure), "independent"),
            1 => (s.mixed(n, Purity::DoublyPure), s.mixed(n, Purity::DoublyPure), "doubly_pure"),
            2 => (s.mixed(n, Purity::Any), s.mixed(n, Purity::Any), "any"),
            3 => {
                let a = s.mixed(n, Purity::Pure);
                let b = a.scale(&s.nonzero_rational());
                (a, b, "dependent")
            }
            _ => {
                let a = s.mixed(n, Purity::Any);
                let b = CDElement::scalar(n, s.rational()).add(&a.pure_part().scale(&s.rational())).expect("same level");
                if b.is_zero() {
                    (a.clone(), a, "dependent")
                } else {
                    (a, b, "dependent")
                }
            }
        };
        out.push(Instance::of(&[("a", &a), ("b", &b)]).label("kind", kind));
    }
    out
}

fn check_yui(inst: &Instance) -> Result<Verdict> {
    let (a, b) = (inst.get("a")?, inst.get("b")?);
    if a.is_zero() || b.is_zero() {
        return Err(hypothesis("a and b must be nonzero"));
    }
    let witness = yui_witness(a, b)?;
    let dependent = pure_parts_dependent(a, b)?;
    Ok(match (&witness, dependent) {
        (None, false) => Verdict::Fails("(a, x, b) = 0 for every x but the pure parts are independent".into()),
        (Some(x), true) => Verdict::Fails(format!("pure parts dependent but (a, {x}, b) != 0")),
        _ => Verdict::Holds,
    })
}

// proposition 3.1. The instance is the pure element a; its doubly pure part
// plays the role of c with r = 1.

fn gen_proposition_3_1(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let e0t = CDElement::tilde_unit(n).expect("level >= 4");
    let mut cs: Vec<(CDElement, &str)> = Vec::new();
    if n <= 5 {
        for i in indices(n, Purity::DoublyPure) {
            cs.push((basis(n, i), "basis"));
        }
    }
    for t in 0..spec.trials {
        let c = match t % 3 {
            0 => (s.alternative_pure(n).decompose().doubly_pure, "alternative"),
            1 => (s.mixed(n, Purity::DoublyPure), "random"),
            _ => (s.sparse(n, Purity::DoublyPure, 2), "sparse"),
        };
        cs.push(c);
    }
    let mut out = Vec::new();
    for (c, kind) in cs {
        if c.is_zero() {
            continue;
        }
        let a = c.scale(&s.nonzero_rational()).add(&e0t.scale(&s.rational())).expect("same level");
        out.push(Instance::of(&[("a", &a)]).label("kind", kind));
    }
    out
}

fn check_proposition_3_1(inst: &Instance) -> Result<Verdict> {
    let a = inst.get("a")?;
    let d = a.decompose();
    if !a.is_pure() || d.doubly_pure.is_zero() {
        return Err(hypothesis("a must be pure with nonzero doubly pure part"));
    }
    let c = &d.doubly_pure;
    for i in 0..a.dim() {
        let x = basis(a.level(), i);
        let lhs = associator(a, a, &x)?;
        let rhs = associator(c, c, &x)?;
        if lhs != rhs {
            return Ok(Verdict::Fails(format!("(a, a, e{i}) = {lhs} but (c, c, e{i}) = {rhs}")));
        }
    }
    let (alt_a, alt_c) = (is_alternative(a), is_alternative(c));
    Ok(verdict(alt_a == alt_c, || format!("a alternative: {alt_a}, c alternative: {alt_c}")))
}

// lemma 3.2

fn gen_lemma_3_2(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = Vec::new();
    if n <= 3 {
        let zero = CDElement::zero(n);
        let pures: Vec<CDElement> =
            std::iter::once(zero).chain(indices(n, Purity::Pure).into_iter().map(|i| basis(n, i))).collect();
        let all: Vec<CDElement> = (0..dim_of(n)).map(|i| basis(n, i)).collect();
        for a in &pures {
            for b in &pures {
                for x in &all {
                    for y in &all {
                        out.push(Instance::of(&[("a", a), ("b", b), ("x", x), ("y", y)]).label("kind", "basis"));
                    }
                }
            }
        }
        return out;
    }
    for _ in 0..spec.trials {
        let a = s.mixed(n, Purity::Pure);
        let b = s.mixed(n, Purity::Pure);
        let x = s.mixed(n, Purity::Any);
        let y = s.mixed(n, Purity::Any);
        out.push(Instance::of(&[("a", &a), ("b", &b), ("x", &x), ("y", &y)]).label("kind", "random"));
    }
    out
}

fn check_lemma_3_2_instance(inst: &Instance) -> Result<Verdict> {
    let (a, b, x, y) = (inst.get("a")?, inst.get("b")?, inst.get("x")?, inst.get("y")?);
    let ok = check_lemma_3_2(a, b, x, y)?;
    Ok(verdict(ok, || "L_(a,b)^2 (x, y) differs from (A x - S y, A y + S x)".into()))
}

// theorem 3.3; a and b live at the requested level, (a, b) one level up.

fn gen_theorem_3_3(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = Vec::new();
    if n <= EXHAUSTIVE_PAIR_LEVEL {
        let pures: Vec<CDElement> = std::iter::once(CDElement::zero(n))
            .chain(indices(n, Purity::Pure).into_iter().map(|i| basis(n, i)))
            .collect();
        for a in &pures {
            for b in &pures {
                out.push(Instance::of(&[("a", a), ("b", b)]).label("kind", "basis"));
            }
        }
    }
    for t in 0..spec.trials {
        let (a, b, kind) = match t % 3 {
            0 => (s.mixed(n, Purity::Pure), s.mixed(n, Purity::Pure), "random"),
            1 => {
                let a = s.alternative_pure(n);
                let b = a.scale(&s.rational());
                (a, b, "dependent_alternative")
            }
            _ => {
                let a = s.mixed(n, Purity::Pure);
                let b = a.scale(&s.rational());
                (a, b, "dependent")
            }
        };
        out.push(Instance::of(&[("a", &a), ("b", &b)]).label("kind", kind));
    }
    out
}

fn check_theorem_3_3(inst: &Instance) -> Result<Verdict> {
    let (a, b) = (inst.get("a")?, inst.get("b")?);
    if !a.is_pure() || !b.is_pure() {
        return Err(hypothesis("a and b must be pure"));
    }
    let i = is_alternative(&CDElement::from_halves(a, b)?);
    let ii = is_alternative(a) && is_alternative(b);
    let iii = pure_parts_dependent(a, b)?;
    Ok(verdict(i == (ii && iii), || format!("(i) = {i}, (ii) = {ii}, (iii) = {iii}")))
}

// lemma 4.1

fn gen_lemma_4_1(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = Vec::new();
    if n <= 5 {
        for i in 0..dim_of(n) {
            out.push(Instance::of(&[("a", &basis(n, i))]).label("kind", "basis"));
        }
    }
    let e0t = CDElement::tilde_unit(n).expect("level >= 1");
    for t in 0..spec.trials {
        let (a, kind) = match t % 4 {
            0 => (s.mixed(n, Purity::Any), "random"),
            1 => (CDElement::scalar(n, s.nonzero_rational()), "real"),
            2 => (CDElement::scalar(n, s.rational()).add(&e0t.scale(&s.nonzero_rational())).expect("same level"), "tilde_e0"),
            _ => (CDElement::scalar(n, s.rational()).add(&s.alternative_pure(n)).expect("same level"), "alternative"),
        };
        if !a.is_zero() {
            out.push(Instance::of(&[("a", &a)]).label("kind", kind));
        }
    }
    out
}

fn check_lemma_4_1(inst: &Instance) -> Result<Verdict> {
    let a = inst.get("a")?;
    if a.is_zero() {
        return Err(hypothesis("a must be nonzero"));
    }
    let n = a.level();
    let mut witness = None;
    'scan: for i in 0..a.dim() {
        for j in 0..a.dim() {
            if !associator(&basis(n, i), a, &basis(n, j))?.is_zero() {
                witness = Some((i, j));
                break 'scan;
            }
        }
    }
    Ok(match (witness, a.is_real()) {
        (None, false) => Verdict::Fails("(x, a, y) = 0 for all basis x, y but a is not real".into()),
        (Some((i, j)), true) => Verdict::Fails(format!("a is real but (e{i}, a, e{j}) != 0")),
        _ => Verdict::Holds,
    })
}

// theorem 4.2: strongly alternative exactly when the pure part is a multiple of ẽ0.

fn gen_theorem_4_2(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out: Vec<Instance> =
        (0..dim_of(n)).map(|i| Instance::of(&[("a", &basis(n, i))]).label("kind", "basis")).collect();
    let e0t = CDElement::tilde_unit(n).expect("level >= 1");
    for t in 0..spec.trials {
        let (a, kind) = match t % 4 {
            0 => (s.mixed(n, Purity::Pure), "random"),
            1 => (s.alternative_pure(n), "alternative"),
            2 => (e0t.scale(&s.nonzero_rational()), "tilde_e0"),
            _ => {
                let i = s.basis_index(n, Purity::DoublyPure);
                (e0t.scale(&s.nonzero_rational()).add(&basis(n, i).scale(&s.nonzero_rational())).expect("same level"), "perturbed")
            }
        };
        out.push(Instance::of(&[("a", &a)]).label("kind", kind));
    }
    out
}

fn check_theorem_4_2(inst: &Instance) -> Result<Verdict> {
    let a = inst.get("a")?;
    let h = half_of(a.level());
    let in_span = a.support().all(|i| i == 0 || i == h);
    let status = is_strongly_alternative(a);
    Ok(verdict(status.strongly_alternative == in_span, || match &status.witness {
        Some(w) => format!("pure part is a multiple of ẽ0 but (a, x, x) != 0 for x = {w}"),
        None => "strongly alternative outside span{e0, ẽ0}".into(),
    }))
}

// corollary 4.3, on the six words in tau and mu.

const WORDS: [&str; 6] = ["", "mu", "mu.mu", "tau", "tau.mu", "tau.mu.mu"];

fn apply_word(word: &str, x: &CDElement) -> Result<Sqrt3Element> {
    let mut v = Sqrt3Element::from_rational(x.clone());
    for g in word.split('.').filter(|g| !g.is_empty()).rev() {
        v = match g {
            "tau" => tau_sqrt3(&v)?,
            "mu" => mu_sqrt3(&v)?,
            _ => return Err(AlgebraError::Payload(format!("unknown map `{g}`"))),
        };
    }
    Ok(v)
}

fn gen_corollary_4_3(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = Vec::new();
    for t in 0..spec.trials.max(WORDS.len()) {
        let a = s.mixed(n, Purity::Any);
        let b = s.mixed(n, Purity::Any);
        out.push(Instance::of(&[("a", &a), ("b", &b)]).label("map", WORDS[t % WORDS.len()]));
    }
    out
}

fn check_corollary_4_3(inst: &Instance) -> Result<Verdict> {
    let (a, b) = (inst.get("a")?, inst.get("b")?);
    let word = inst.get_label("map")?;
    let n = a.level();
    let e0t = CDElement::tilde_unit(n)?;
    let image = apply_word(word, &e0t)?;
    let sign = if image.as_rational() == Some(&e0t) {
        Rational::one()
    } else if image.as_rational() == Some(&e0t.neg()) {
        -Rational::one()
    } else {
        return Ok(Verdict::Fails(format!("φ(ẽ0) = {image}")));
    };
    let fa = apply_word(word, a)?;
    let lhs = apply_word(word, &a.tilde()?)?;
    let t = fa.tilde()?;
    let rhs = Sqrt3Element::new(t.rational_part().scale(&sign), t.sqrt3_part().scale(&sign))?;
    if lhs != rhs {
        return Ok(Verdict::Fails(format!("φ(ã) = {lhs} but ±φ(a)~ = {rhs}")));
    }
    let fab = apply_word(word, &a.multiply(b)?)?;
    let prod = fa.multiply(&apply_word(word, b)?)?;
    Ok(verdict(fab == prod, || format!("φ(ab) = {fab} but φ(a)φ(b) = {prod}")))
}

// theorem 5.1

fn gen_theorem_5_1(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = Vec::new();
    let accept = |a: &CDElement, b: &CDElement| check_span_hypotheses(a, b).is_ok();
    if n <= EXHAUSTIVE_PAIR_LEVEL {
        for inst in basis_pairs(n, Purity::DoublyPure, Purity::DoublyPure, ("a", "b")) {
            if accept(inst.get("a").expect("a"), inst.get("b").expect("b")) {
                out.push(inst);
            }
        }
    }
    let mut found = 0;
    let mut attempts = 0;
    while found < spec.trials && attempts < 50 * spec.trials.max(1) {
        attempts += 1;
        let a = s.unit(n, Purity::DoublyPure, 2);
        let b = s.unit(n, Purity::DoublyPure, 2);
        // signed basis pairs are already covered above
        if a.support().count() + b.support().count() >= 3 && accept(&a, &b) {
            out.push(Instance::of(&[("a", &a), ("b", &b)]).label("kind", "random_unit"));
            found += 1;
        }
    }
    out
}

fn check_theorem_5_1(inst: &Instance) -> Result<Verdict> {
    let (a, b) = (inst.get("a")?, inst.get("b")?);
    let q = quaternion_span(a, b)?;
    let o = octonion_span(a, b)?;
    for (basis, level, name) in [(&q, 2, "quaternion"), (&o, 3, "octonion")] {
        if !basis.closed {
            return Ok(Verdict::Fails(format!("{name} span is not closed")));
        }
        if !basis.matches_level(level) {
            let found = basis.find_signed_identification(level);
            let found = match found {
                Some(p) => p.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                None => "none".into(),
            };
            return Ok(Verdict::Fails(format!(
                "{name} span differs from the level-{level} table under the fixed identification; signed identification found: {found}"
            )));
        }
    }
    Ok(Verdict::Holds)
}

// theorem 5.2 and the implication chain share their instances.

fn gen_pure_pairs(spec: &RandomSpec, s: &mut Sampler) -> Vec<Instance> {
    let n = spec.level;
    let mut out = basis_pairs(n, Purity::Pure, Purity::Pure, ("a", "b"));
    for t in 0..spec.trials {
        let (a, b, kind) = match t % 6 {
            0 => (s.mixed(n, Purity::Pure), s.mixed(n, Purity::Pure), "random"),
            1 => (s.alternative_pure(n), s.mixed(n, Purity::Pure), "alternative_a"),
            2 => (s.sparse(n, Purity::Pure, 2), s.sparse(n, Purity::Pure, 2), "sparse"),
            3 => {
                let a = s.alternative_pure(n);
                let b = a.scale(&s.nonzero_rational()).add(&s.sparse(n, Purity::Pure, 1)).expect("same level");
                (a, b, "near_dependent")
            }
            4 => {
                let a = s.unit(n, Purity::DoublyPure, 2);
                let b = s.unit(n, Purity::DoublyPure, 2);
                (a, b, "unit")
            }
            _ => {
                let a = s.mixed(n, Purity::DoublyPure);
                let b = in_h_a(s, &a).add(&CDElement::tilde_unit(n).expect("level >= 1").scale(&s.rational())).expect("same level");
                (a, b, "in_h_a")
            }
        };
        if !a.is_zero() && !b.is_zero() {
            out.push(Instance::of(&[("a", &a), ("b", &b)]).label("kind", kind));
        }
    }
    out
}

fn pure_nonzero_pair(inst: &Instance) -> Result<(&CDElement, &CDElement)> {
    let (a, b) = (inst.get("a")?, inst.get("b")?);
    if a.is_zero() || b.is_zero() || !a.is_pure() || !b.is_pure() {
        return Err(hypothesis("a and b must be nonzero and pure"));
    }
    Ok((a, b))
}

fn check_theorem_5_2(inst: &Instance) -> Result<Verdict> {
    let (a, b) = pure_nonzero_pair(inst)?;
    let ab = a.multiply(b)?;
    let alt = alternates_with(a, b)?;
    let normed_pairs = is_normed_set(&[a.clone(), b.clone()])? && is_normed_set(&[a.clone(), ab.clone()])?;
    if alt != normed_pairs {
        return Ok(Verdict::Fails(format!("part 1: alternates {alt}, {{a,b}} and {{a,ab}} normed {normed_pairs}")));
    }
    let strong = strongly_alternates_with(a, b)?;
    let normed_triple = is_normed_set(&[a.clone(), b.clone(), ab])?;
    Ok(verdict(strong == normed_triple, || {
        format!("part 2: strongly alternates {strong}, {{a,b,ab}} normed {normed_triple}")
    }))
}

fn check_implication_chain(inst: &Instance) -> Result<Verdict> {
    let (a, b) = pure_nonzero_pair(inst)?;
    let strong = strongly_alternates_with(a, b)?;
    let alt = alternates_with(a, b)?;
    let normed = normed_with(a, b)?;
    Ok(verdict((!strong || alt) && (!alt || normed), || {
        format!("strongly alternates {strong}, alternates {alt}, normed {normed}")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<_> = REGISTRY.iter().map(|s| s.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn words_compose() {
        let x = basis(4, 3);
        let v = apply_word("mu.mu.mu", &x).unwrap();
        assert_eq!(v.as_rational(), Some(&x));
        assert!(apply_word("sigma", &x).is_err());
    }

    #[test]
    fn zero_divisors_found() {
        let pairs = zero_divisor_pairs(4, 3);
        assert_eq!(pairs.len(), 3);
        for (a, x) in pairs {
            assert!((&a * &x).is_zero() && !a.is_zero() && !x.is_zero());
        }
        assert!(zero_divisor_pairs(3, 3).is_empty());
    }
}
