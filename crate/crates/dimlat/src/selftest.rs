//! Built-in verification grid: eight exhaustive and randomized checks
//! covering the lattice algorithm, the order and monoid laws, cardinal
//! arithmetic, the finite-dimensional oracle, closures, separation
//! predicates and the representation bounds. `dimlat selftest` runs all
//! of them; the acceptance suite runs them one criterion per test.

use std::sync::Arc;
use std::time::Instant;

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraDesc, AtomType};
use crate::chainset::{ChainSet, Interval};
use crate::complattice::{
    family_inf, family_inf_pointwise, family_sup, family_sup_pointwise, is_lower_bound,
    is_upper_bound, FamilySpec,
};
use crate::dimfun::DimElement;
use crate::extval::ExtValue;
use crate::fdoracle::{oracle_check, rep_common_sub, rep_common_super, Shape};
use crate::qot::{
    closure_singleton, in_closure, is_t0, is_t1, quotient_maps_normal, ClassSetDescriptor,
};

pub const CRITERIA: &[&str] = &[
    "complete-lattice oracle equivalence",
    "least-upper-bound certification",
    "lattice and monoid laws",
    "cardinal arithmetic laws",
    "finite-dimensional ground truth",
    "closure formulas",
    "separation predicates",
    "representation bounds",
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = Result<String, String>;

pub fn run_one(index: usize) -> CriterionResult {
    let name = CRITERIA[index - 1];
    let start = Instant::now();
    let outcome = match index {
        1 => criterion_lattice_oracle(),
        2 => criterion_bound_certification(),
        3 => criterion_laws(),
        4 => criterion_cardinal_arithmetic(),
        5 => criterion_fd_ground_truth(),
        6 => criterion_closures(),
        7 => criterion_separation(),
        8 => criterion_representation(),
        _ => Err(format!("no criterion {}", index)),
    };
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(detail) => CriterionResult {
            index,
            name,
            passed: true,
            detail,
            millis,
        },
        Err(detail) => CriterionResult {
            index,
            name,
            passed: false,
            detail,
            millis,
        },
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA.len()).map(run_one).collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn algebra(atoms: Vec<(&str, AtomType)>) -> Arc<AlgebraDesc> {
    Arc::new(
        AlgebraDesc::new(atoms.into_iter().map(|(n, t)| (n.to_string(), t)).collect())
            .expect("valid test algebra"),
    )
}

/// The fixed two-atom algebra and six-value grid for the exhaustive
/// lattice checks.
fn grid_algebra() -> Arc<AlgebraDesc> {
    algebra(vec![("a1", AtomType::IIInf(1)), ("a2", AtomType::III(1))])
}

fn grid_values() -> Vec<ExtValue> {
    vec![
        ExtValue::zero(),
        ExtValue::fin(1, 2),
        ExtValue::fin_int(1),
        ExtValue::fin(3, 2),
        ExtValue::Aleph(0),
        ExtValue::Aleph(1),
    ]
}

fn grid_elements(alg: &Arc<AlgebraDesc>) -> Vec<DimElement> {
    let values = grid_values();
    let mut out = Vec::with_capacity(36);
    for v1 in &values {
        for v2 in &values {
            out.push(DimElement::new_unchecked(
                alg.clone(),
                vec![v1.clone(), v2.clone()],
            ));
        }
    }
    out
}

/// Every ordered family of size 1..=3 drawn from the 36 grid elements.
fn for_each_grid_family(
    mut check: impl FnMut(&[DimElement]) -> Result<(), String>,
) -> Result<usize, String> {
    let alg = grid_algebra();
    let elems = grid_elements(&alg);
    let mut count = 0usize;
    let mut buf: Vec<DimElement> = Vec::with_capacity(3);
    for i in &elems {
        buf.clear();
        buf.push(i.clone());
        check(&buf)?;
        count += 1;
        for j in &elems {
            buf.truncate(1);
            buf.push(j.clone());
            check(&buf)?;
            count += 1;
            for k in &elems {
                buf.truncate(2);
                buf.push(k.clone());
                check(&buf)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

const ATOM_TYPE_POOL: &[fn(&mut ChaCha8Rng) -> AtomType] = &[
    |rng| AtomType::IFin(rng.random_range(1..=4)),
    |rng| AtomType::IInf(rng.random_range(0..=3)),
    |_| AtomType::II1,
    |rng| AtomType::IIInf(rng.random_range(0..=3)),
    |rng| AtomType::III(rng.random_range(0..=3)),
];

fn random_algebra(rng: &mut ChaCha8Rng, max_atoms: usize) -> Arc<AlgebraDesc> {
    let n = rng.random_range(1..=max_atoms);
    let atoms = (0..n)
        .map(|i| {
            let ty = ATOM_TYPE_POOL[rng.random_range(0..ATOM_TYPE_POOL.len())](rng);
            (format!("a{}", i + 1), ty)
        })
        .collect();
    Arc::new(AlgebraDesc::new(atoms).expect("valid random algebra"))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rat(rng.random_range(0..=24), rng.random_range(1..=12))
}

fn random_cone_value(rng: &mut ChaCha8Rng, ty: &AtomType) -> ExtValue {
    match ty {
        AtomType::III(k) => {
            if rng.random_bool(0.4) {
                ExtValue::zero()
            } else {
                ExtValue::Aleph(rng.random_range(0..=*k))
            }
        }
        AtomType::IInf(k) | AtomType::IIInf(k) => {
            if rng.random_bool(0.5) {
                ExtValue::Fin(random_rational(rng))
            } else {
                ExtValue::Aleph(rng.random_range(0..=*k))
            }
        }
        AtomType::IFin(_) | AtomType::II1 => ExtValue::Fin(random_rational(rng)),
    }
}

fn random_cone_element(rng: &mut ChaCha8Rng, alg: &Arc<AlgebraDesc>) -> DimElement {
    let values = alg
        .atoms()
        .iter()
        .map(|a| random_cone_value(rng, &a.ty))
        .collect();
    DimElement::new_unchecked(alg.clone(), values)
}

fn seed(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xD1A1_A700 ^ tag)
}

// criterion 1

fn criterion_lattice_oracle() -> Check {
    let exhaustive = for_each_grid_family(|members| {
        let family = FamilySpec::explicit_unchecked(members.to_vec()).map_err(|e| e.to_string())?;
        let sup = family_sup(&family).map_err(|e| e.to_string())?;
        let sup_pw = family_sup_pointwise(&family).map_err(|e| e.to_string())?;
        if sup != sup_pw {
            return Err(format!(
                "sup mismatch: slice {} vs pointwise {}",
                sup, sup_pw
            ));
        }
        let inf = family_inf(&family).map_err(|e| e.to_string())?;
        let inf_pw = family_inf_pointwise(&family).map_err(|e| e.to_string())?;
        if inf != inf_pw {
            return Err(format!(
                "inf mismatch: slice {} vs pointwise {}",
                inf, inf_pw
            ));
        }
        Ok(())
    })?;
    if exhaustive < 20_000 {
        return Err(format!("only {} exhaustive cases enumerated", exhaustive));
    }

    let mut rng = seed(1);
    let randomized = 10_000usize;
    for case in 0..randomized {
        let alg = random_algebra(&mut rng, 5);
        let size = rng.random_range(1..=4);
        let members: Vec<DimElement> = (0..size)
            .map(|_| random_cone_element(&mut rng, &alg))
            .collect();
        let family = FamilySpec::explicit(members).map_err(|e| e.to_string())?;
        let sup = family_sup(&family).map_err(|e| e.to_string())?;
        if sup != family_sup_pointwise(&family).map_err(|e| e.to_string())? {
            return Err(format!("randomized case {}: sup mismatch", case));
        }
        let inf = family_inf(&family).map_err(|e| e.to_string())?;
        if inf != family_inf_pointwise(&family).map_err(|e| e.to_string())? {
            return Err(format!("randomized case {}: inf mismatch", case));
        }
    }
    Ok(format!(
        "{} exhaustive + {} randomized families agree across both routes",
        exhaustive, randomized
    ))
}

// criterion 2

fn criterion_bound_certification() -> Check {
    let alg = grid_algebra();
    let grid = grid_elements(&alg);
    let strictly_less = |a: &DimElement, b: &DimElement| -> Result<bool, String> {
        Ok(a.leq(b).map_err(|e| e.to_string())? && a != b)
    };
    let count = for_each_grid_family(|members| {
        let family = FamilySpec::explicit_unchecked(members.to_vec()).map_err(|e| e.to_string())?;
        let sup = family_sup(&family).map_err(|e| e.to_string())?;
        if !is_upper_bound(&sup, &family).map_err(|e| e.to_string())? {
            return Err(format!("sup {} fails to bound its own family", sup));
        }
        let inf = family_inf(&family).map_err(|e| e.to_string())?;
        if !is_lower_bound(&inf, &family).map_err(|e| e.to_string())? {
            return Err(format!("inf {} fails to bound its own family", inf));
        }
        for g in &grid {
            if strictly_less(g, &sup)? && is_upper_bound(g, &family).map_err(|e| e.to_string())? {
                return Err(format!("{} below {} is still an upper bound", g, sup));
            }
            if strictly_less(&inf, g)? && is_lower_bound(g, &family).map_err(|e| e.to_string())? {
                return Err(format!("{} above {} is still a lower bound", g, inf));
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "{} families certified minimal/maximal against the 36-element grid",
        count
    ))
}

// criterion 3

fn criterion_laws() -> Check {
    let rounds = 10_000usize;
    let mut rng = seed(3);
    let err = |e: crate::error::Error| e.to_string();
    for round in 0..rounds {
        let alg = random_algebra(&mut rng, 5);
        let a = random_cone_element(&mut rng, &alg);
        let b = random_cone_element(&mut rng, &alg);
        let c = random_cone_element(&mut rng, &alg);
        let ctx = |law: &str| format!("round {}: {} fails", round, law);

        // lattice laws
        if a.meet(&a).map_err(err)? != a {
            return Err(ctx("meet idempotence"));
        }
        if a.meet(&b).map_err(err)? != b.meet(&a).map_err(err)? {
            return Err(ctx("meet commutativity"));
        }
        if a.join(&b).map_err(err)? != b.join(&a).map_err(err)? {
            return Err(ctx("join commutativity"));
        }
        let assoc_meet_l = a.meet(&b).map_err(err)?.meet(&c).map_err(err)?;
        let assoc_meet_r = a.meet(&b.meet(&c).map_err(err)?).map_err(err)?;
        if assoc_meet_l != assoc_meet_r {
            return Err(ctx("meet associativity"));
        }
        let assoc_join_l = a.join(&b).map_err(err)?.join(&c).map_err(err)?;
        let assoc_join_r = a.join(&b.join(&c).map_err(err)?).map_err(err)?;
        if assoc_join_l != assoc_join_r {
            return Err(ctx("join associativity"));
        }
        if a.meet(&a.join(&b).map_err(err)?).map_err(err)? != a {
            return Err(ctx("absorption meet-join"));
        }
        if a.join(&a.meet(&b).map_err(err)?).map_err(err)? != a {
            return Err(ctx("absorption join-meet"));
        }
        // agreement with the pointwise extrema
        let pw_min = DimElement::new_unchecked(
            alg.clone(),
            a.values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| x.clone().min(y.clone()))
                .collect(),
        );
        let pw_max = DimElement::new_unchecked(
            alg.clone(),
            a.values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| x.clone().max(y.clone()))
                .collect(),
        );
        if a.meet(&b).map_err(err)? != pw_min || a.join(&b).map_err(err)? != pw_max {
            return Err(ctx("pointwise extremum agreement"));
        }

        // monoid laws
        let zero = DimElement::zero(&alg);
        if a.add(&zero).map_err(err)? != a {
            return Err(ctx("additive identity"));
        }
        if a.add(&b).map_err(err)? != b.add(&a).map_err(err)? {
            return Err(ctx("additive commutativity"));
        }
        let add_l = a.add(&b).map_err(err)?.add(&c).map_err(err)?;
        let add_r = a.add(&b.add(&c).map_err(err)?).map_err(err)?;
        if add_l != add_r {
            return Err(ctx("additive associativity"));
        }

        // order compatibility, witnessed constructively
        let sum = a.add(&c).map_err(err)?;
        if !a.leq(&sum).map_err(err)? {
            return Err(ctx("sums dominate their summands"));
        }
        if a.leq(&b).map_err(err)? {
            let w = a.complement_in(&b).map_err(err)?;
            if a.add(&w).map_err(err)? != b {
                return Err(ctx("complement witness"));
            }
        } else if a.complement_in(&b).is_ok() {
            return Err(ctx("complement must reject incomparable pairs"));
        }
    }
    Ok(format!(
        "{} random triples satisfy every lattice, monoid and order law",
        rounds
    ))
}

// criterion 4

fn criterion_cardinal_arithmetic() -> Check {
    let mut cases = 0usize;
    for num in 0..=24i64 {
        for den in 1..=12i64 {
            let q = ExtValue::Fin(rat(num, den));
            for level in 0..=3u32 {
                let aleph = ExtValue::Aleph(level);
                if q.add(&aleph) != aleph || aleph.add(&q) != aleph {
                    return Err(format!("{} + {} must absorb", q, aleph));
                }
                if num > 0 {
                    let lambda = rat(num, den);
                    let scaled = aleph.scale(&lambda).map_err(|e| e.to_string())?;
                    if scaled != aleph {
                        return Err(format!("{} · {} must fix the cardinal", lambda, aleph));
                    }
                }
                cases += 1;
            }
        }
    }
    for i in 0..=3u32 {
        for j in 0..=3u32 {
            let sum = ExtValue::Aleph(i).add(&ExtValue::Aleph(j));
            if sum != ExtValue::Aleph(i.max(j)) {
                return Err(format!("aleph {} + aleph {} must be the maximum", i, j));
            }
            cases += 1;
        }
    }
    Ok(format!(
        "{} exhaustive absorption and scaling identities hold",
        cases
    ))
}

// criterion 5

fn criterion_fd_ground_truth() -> Check {
    let shapes = [vec![2u64], vec![2, 3], vec![1, 2, 2]];
    let mut detail = Vec::new();
    for orders in &shapes {
        let shape = Shape::new(orders.clone()).map_err(|e| e.to_string())?;
        let classes = oracle_check(&shape).map_err(|e| format!("shape {:?}: {}", orders, e))?;
        detail.push(format!("{:?}: {} classes", orders, classes));
    }
    Ok(format!(
        "rank model matches the dimension calculus ({})",
        detail.join("; ")
    ))
}

// criterion 6

fn check_membership_grid(
    label: &str,
    p: &DimElement,
    grid: &[(ExtValue, bool)],
) -> Result<(), String> {
    let alg = p.algebra().clone();
    let descriptor = ClassSetDescriptor::explicit(vec![p.clone()]).map_err(|e| e.to_string())?;
    for (value, expected) in grid {
        let q = DimElement::new_unchecked(alg.clone(), vec![value.clone()]);
        let got = in_closure(&q, &descriptor).map_err(|e| e.to_string())?;
        if got != *expected {
            return Err(format!(
                "{}: membership of {} expected {} got {}",
                label, value, expected, got
            ));
        }
    }
    Ok(())
}

fn criterion_closures() -> Check {
    // finite class over a properly infinite atom: the closed trace segment
    let iiinf = algebra(vec![("a", AtomType::IIInf(1))]);
    let p = DimElement::new_unchecked(iiinf.clone(), vec![ExtValue::fin_int(1)]);
    let closure = closure_singleton(&p).map_err(|e| e.to_string())?;
    let segment = ChainSet::build(
        vec![Interval::bounded(rat(0, 1), true, rat(1, 1), true).map_err(|e| e.to_string())?],
        vec![],
        false,
        vec![],
    )
    .map_err(|e| e.to_string())?;
    let expected =
        ClassSetDescriptor::product(iiinf.clone(), vec![segment]).map_err(|e| e.to_string())?;
    if closure != expected {
        return Err(format!(
            "segment closure: expected {} got {}",
            expected, closure
        ));
    }
    check_membership_grid(
        "segment",
        &p,
        &[
            (ExtValue::zero(), true),
            (ExtValue::fin(1, 8), true),
            (ExtValue::fin(1, 2), true),
            (ExtValue::fin(3, 4), true),
            (ExtValue::fin_int(1), true),
            (ExtValue::fin(9, 8), false),
            (ExtValue::fin(3, 2), false),
            (ExtValue::fin_int(7), false),
            (ExtValue::Aleph(0), false),
            (ExtValue::Aleph(1), false),
        ],
    )?;

    // properly infinite class with full support: everything, larger
    // cardinals included
    let p = DimElement::new_unchecked(iiinf.clone(), vec![ExtValue::Aleph(0)]);
    let closure = closure_singleton(&p).map_err(|e| e.to_string())?;
    let everything = ChainSet::build(
        vec![Interval::unbounded_above(rat(0, 1), true).map_err(|e| e.to_string())?],
        vec![],
        false,
        vec![0, 1],
    )
    .map_err(|e| e.to_string())?;
    let expected =
        ClassSetDescriptor::product(iiinf.clone(), vec![everything]).map_err(|e| e.to_string())?;
    if closure != expected {
        return Err(format!(
            "full closure: expected {} got {}",
            expected, closure
        ));
    }
    check_membership_grid(
        "full",
        &p,
        &[
            (ExtValue::zero(), true),
            (ExtValue::fin(1, 8), true),
            (ExtValue::fin(1, 2), true),
            (ExtValue::fin_int(1), true),
            (ExtValue::fin(3, 2), true),
            (ExtValue::fin(22, 7), true),
            (ExtValue::fin_int(100), true),
            (ExtValue::Aleph(0), true),
            (ExtValue::Aleph(1), true),
            (ExtValue::fin(1, 3), true),
        ],
    )?;

    // singleton over a finite algebra stays a singleton
    let ii1 = algebra(vec![("a", AtomType::II1)]);
    let p = DimElement::new_unchecked(ii1.clone(), vec![ExtValue::fin(1, 2)]);
    let closure = closure_singleton(&p).map_err(|e| e.to_string())?;
    let point = ChainSet::singleton(&ExtValue::fin(1, 2)).map_err(|e| e.to_string())?;
    let expected =
        ClassSetDescriptor::product(ii1.clone(), vec![point]).map_err(|e| e.to_string())?;
    if closure != expected {
        return Err(format!(
            "point closure: expected {} got {}",
            expected, closure
        ));
    }
    check_membership_grid(
        "point",
        &p,
        &[
            (ExtValue::zero(), false),
            (ExtValue::fin(1, 8), false),
            (ExtValue::fin(1, 4), false),
            (ExtValue::fin(1, 3), false),
            (ExtValue::fin(1, 2), true),
            (ExtValue::fin(5, 8), false),
            (ExtValue::fin(2, 3), false),
            (ExtValue::fin(3, 4), false),
            (ExtValue::fin(7, 8), false),
            (ExtValue::fin_int(1), false),
        ],
    )?;

    Ok("three closure formulas reproduced exactly, memberships checked on 10-value grids".into())
}

// criterion 7

fn sweep_types() -> Vec<AtomType> {
    let mut out = vec![AtomType::IFin(1), AtomType::IFin(2), AtomType::II1];
    for level in 0..=2u32 {
        out.push(AtomType::IInf(level));
        out.push(AtomType::IIInf(level));
        out.push(AtomType::III(level));
    }
    out
}

fn sweep_grid_values(ty: &AtomType) -> Vec<ExtValue> {
    match ty {
        AtomType::IFin(1) => vec![ExtValue::zero(), ExtValue::fin_int(1)],
        AtomType::IFin(_) => vec![ExtValue::zero(), ExtValue::fin(1, 2), ExtValue::fin_int(1)],
        AtomType::II1 => vec![ExtValue::zero(), ExtValue::fin(1, 2), ExtValue::fin_int(1)],
        AtomType::IInf(_) => vec![ExtValue::zero(), ExtValue::fin_int(2), ExtValue::Aleph(0)],
        AtomType::IIInf(_) => vec![ExtValue::zero(), ExtValue::fin(3, 2), ExtValue::Aleph(0)],
        AtomType::III(_) => vec![ExtValue::zero(), ExtValue::Aleph(0)],
    }
}

fn product_elements(alg: &Arc<AlgebraDesc>) -> Vec<DimElement> {
    let mut rows = vec![Vec::new()];
    for atom in alg.atoms() {
        let values = sweep_grid_values(&atom.ty);
        let mut next = Vec::with_capacity(rows.len() * values.len());
        for prefix in &rows {
            for v in &values {
                let mut row: Vec<ExtValue> = prefix.clone();
                row.push(v.clone());
                next.push(row);
            }
        }
        rows = next;
    }
    rows.into_iter()
        .map(|values| DimElement::new_unchecked(alg.clone(), values))
        .collect()
}

fn criterion_separation() -> Check {
    let types = sweep_types();
    let mut all: Vec<Vec<AtomType>> = Vec::new();
    for t1 in &types {
        all.push(vec![t1.clone()]);
        for t2 in &types {
            all.push(vec![t1.clone(), t2.clone()]);
            for t3 in &types {
                all.push(vec![t1.clone(), t2.clone(), t3.clone()]);
            }
        }
    }
    let mut t0_checked = 0usize;
    for combo in &all {
        let atoms: Vec<(String, AtomType)> = combo
            .iter()
            .enumerate()
            .map(|(i, t)| (format!("a{}", i + 1), t.clone()))
            .collect();
        let alg = Arc::new(AlgebraDesc::new(atoms).map_err(|e| e.to_string())?);
        let expect_t1 = combo.iter().all(AtomType::is_finite_type);
        let expect_t0 = combo
            .iter()
            .filter_map(AtomType::homogeneity)
            .all(|k| k == 0);
        if is_t1(&alg) != expect_t1 {
            return Err(format!("is_T1 wrong on {:?}", combo));
        }
        if is_t0(&alg) != expect_t0 {
            return Err(format!("is_T0 wrong on {:?}", combo));
        }
        if quotient_maps_normal(&alg) != expect_t0 {
            return Err(format!("normality wrong on {:?}", combo));
        }
        if expect_t0 {
            let elems = product_elements(&alg);
            for q in &elems {
                let descriptor =
                    ClassSetDescriptor::explicit(vec![q.clone()]).map_err(|e| e.to_string())?;
                for p in &elems {
                    let inside = in_closure(p, &descriptor).map_err(|e| e.to_string())?;
                    if inside && !p.leq(q).map_err(|e| e.to_string())? {
                        return Err(format!(
                            "T0 algebra {:?}: {} in closure of {} without domination",
                            combo, p, q
                        ));
                    }
                    t0_checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} algebras swept; {} closure-membership pairs respect the order on T0 algebras",
        all.len(),
        t0_checked
    ))
}

// criterion 8

fn criterion_representation() -> Check {
    let base = algebra(vec![("a", AtomType::II1)]);
    let members = vec![
        DimElement::new_unchecked(base.clone(), vec![ExtValue::fin(1, 2)]),
        DimElement::new_unchecked(base.clone(), vec![ExtValue::fin_int(2)]),
        DimElement::new_unchecked(base.clone(), vec![ExtValue::Aleph(0)]),
    ];
    let sub = rep_common_sub(&base, &members).map_err(|e| e.to_string())?;
    let sup = rep_common_super(&base, &members).map_err(|e| e.to_string())?;

    if sub.amplification.index() != &ExtValue::Aleph(0) {
        return Err(format!(
            "expected index aleph 0, got {}",
            sub.amplification.index()
        ));
    }
    if sub.amplification.result().atom(0).ty != AtomType::IIInf(0) {
        return Err("amplification must be of type II_inf(aleph 0)".into());
    }
    if sub.class.value(0) != &ExtValue::fin(1, 2) {
        return Err(format!(
            "common subrepresentation must be 1/2, got {}",
            sub.class
        ));
    }
    if sup.class.value(0) != &ExtValue::Aleph(0) {
        return Err(format!(
            "common superrepresentation must be aleph 0, got {}",
            sup.class
        ));
    }

    // certify maximality/minimality against a grid of the amplification
    let amp_alg = sub.amplification.result().clone();
    let embedded: Vec<DimElement> = members
        .iter()
        .map(|m| sub.amplification.embed_representation(m))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let family = FamilySpec::explicit(embedded).map_err(|e| e.to_string())?;
    let mut grid: Vec<DimElement> = [
        rat(0, 1),
        rat(1, 4),
        rat(1, 3),
        rat(1, 2),
        rat(1, 1),
        rat(3, 2),
        rat(2, 1),
        rat(3, 1),
        rat(10, 1),
    ]
    .into_iter()
    .map(|q| DimElement::new_unchecked(amp_alg.clone(), vec![ExtValue::Fin(q)]))
    .collect();
    grid.push(DimElement::new_unchecked(
        amp_alg.clone(),
        vec![ExtValue::Aleph(0)],
    ));

    if !is_lower_bound(&sub.class, &family).map_err(|e| e.to_string())? {
        return Err("sub bound is not a common lower bound".into());
    }
    if !is_upper_bound(&sup.class, &family).map_err(|e| e.to_string())? {
        return Err("super bound is not a common upper bound".into());
    }
    for g in &grid {
        if is_lower_bound(g, &family).map_err(|e| e.to_string())?
            && !g.leq(&sub.class).map_err(|e| e.to_string())?
        {
            return Err(format!("{} is a larger common lower bound", g));
        }
        if is_upper_bound(g, &family).map_err(|e| e.to_string())?
            && !sup.class.leq(g).map_err(|e| e.to_string())?
        {
            return Err(format!("{} is a smaller common upper bound", g));
        }
    }
    Ok("bounds over the II_inf(aleph 0) amplification certified against a 10-value grid".into())
}
