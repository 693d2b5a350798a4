use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::family::default_height;
use super::level::Level;
use super::{newton_dim, body_to_family, GradedIdealFamily, MonomialIdeal};
use crate::algebra::{
    ladder_report, LadderEntry, MixedMultiplicityReport, PositivityCertificate, SubsetCheck,
};
use crate::error::{Error, Result};
use crate::fit::leading_coefficient;
use crate::linalg::RowSpan;
use crate::num::{factorial, multi_factorial, Int, Rat};
use crate::poly::{interpolate, monomials_of_degree, monomials_up_to, Polynomial};
use crate::polytope::{minkowski_polynomial, Polytope};
use crate::semigroup::DEFAULT_BOUND;

/// Doublings of the base point before giving up on stabilization.
const MAX_DOUBLINGS: usize = 8;

fn level_of(i: &MonomialIdeal, side: usize) -> Level {
    let d = i.homogeneous_degree().expect("equigenerated") as u64;
    let mut l = Level::empty(i.num_vars(), side, d);
    for g in i.gens() {
        l.insert(g);
    }
    l
}

/// `dim_k num / den`: monomials of `num` outside `den`, certified finite once
/// both agree in some degree at least the top generator degree of `num`.
pub fn quotient_dim(num: &MonomialIdeal, den: &MonomialIdeal, c_cap: u32) -> Result<u64> {
    Error::check_dim("quotient_dim", num.num_vars(), den.num_vars())?;
    if let Some(g) = den.gens().iter().find(|g| !num.contains(g)) {
        return Err(Error::NotContained { generator: g.clone() });
    }
    let v = num.num_vars();
    let beta = num.max_degree();
    let t_end = beta + c_cap as u64;
    let side = t_end as usize + 1;
    type Gens<'a> = Vec<&'a Vec<u32>>;
    let mut by_degree: BTreeMap<u64, (Gens, Gens)> = BTreeMap::new();
    for g in num.gens() {
        by_degree.entry(g.iter().map(|&x| x as u64).sum()).or_default().0.push(g);
    }
    for g in den.gens() {
        by_degree.entry(g.iter().map(|&x| x as u64).sum()).or_default().1.push(g);
    }
    let mut nl = Level::empty(v, side, 0);
    let mut dl = Level::empty(v, side, 0);
    let mut total = 0u64;
    for t in 0..=t_end {
        if t > 0 {
            nl = nl.step();
            dl = dl.step();
        }
        if let Some((ng, dg)) = by_degree.get(&t) {
            for g in ng {
                nl.insert(g);
            }
            for g in dg {
                dl.insert(g);
            }
        }
        let diff = nl.len() - dl.len();
        if t >= beta && diff == 0 {
            return Ok(total);
        }
        total += diff;
    }
    Err(Error::CofinalityNotCertified { c: c_cap })
}

/// Counts `dim J_1^(n_1) ... J_s^(n_s) / I^(n_0) J_1^(n_1) ... J_s^(n_s)`.
enum Counter<'a> {
    /// `I = m^c` and every `J_i` equigenerated: sums of level sizes of the
    /// numerator, cached per `n`.
    Levels {
        c: u64,
        jp: &'a [MonomialIdeal],
        cache: BTreeMap<Vec<u64>, Vec<u64>>,
    },
    Generic {
        ip: &'a MonomialIdeal,
        jp: &'a [MonomialIdeal],
        e: u32,
    },
}

impl<'a> Counter<'a> {
    fn new(ip: &'a MonomialIdeal, jp: &'a [MonomialIdeal]) -> Result<Self> {
        let e = ip.primary_exponent().ok_or_else(|| {
            Error::invalid("quotient_dim", format!("{ip} is not primary to the maximal ideal"))
        })?;
        if let Some(c) = ip.maximal_power_degree() {
            if jp.iter().all(|j| j.homogeneous_degree().is_some()) {
                return Ok(Counter::Levels {
                    c: c as u64,
                    jp,
                    cache: BTreeMap::new(),
                });
            }
        }
        Ok(Counter::Generic { ip, jp, e })
    }

    fn count(&mut self, n0: u64, n: &[u64]) -> Result<u64> {
        match self {
            Counter::Levels { c, jp, cache } => {
                let need = (*c * n0) as usize;
                if let Some(p) = cache.get(n) {
                    if p.len() > need {
                        return Ok(p[need]);
                    }
                }
                let steps = need.max(2 * cache.get(n).map_or(0, |p| p.len()));
                let g: u64 = jp
                    .iter()
                    .zip(n)
                    .map(|(j, &k)| j.homogeneous_degree().expect("equigenerated") as u64 * k)
                    .sum();
                let v = jp.first().map_or(0, |j| j.num_vars());
                let side = g as usize + steps + 1;
                let mut acc = Level::empty(v, side, 0);
                acc.insert(&vec![0; v]);
                for (j, &k) in jp.iter().zip(n).filter(|(_, &k)| k > 0) {
                    let lj = level_of(j, side);
                    for _ in 0..k {
                        acc = acc.minkowski(&lj);
                    }
                }
                let mut prefix = Vec::with_capacity(steps + 1);
                prefix.push(0u64);
                for k in 0..steps {
                    prefix.push(prefix[k] + acc.len());
                    if k + 1 < steps {
                        acc = acc.step();
                    }
                }
                let out = prefix[need];
                cache.insert(n.to_vec(), prefix);
                Ok(out)
            }
            Counter::Generic { ip, jp, e } => {
                let v = ip.num_vars();
                let mut num = MonomialIdeal::unit(v);
                for (j, &k) in jp.iter().zip(n) {
                    num = num.product(&j.power(k))?;
                }
                let den = ip.power(n0).product(&num)?;
                let cap = u32::try_from(*e as u64 * n0)
                    .map_err(|_| Error::Overflow { op: "quotient_dim" })?;
                quotient_dim(&num, &den, cap)
            }
        }
    }
}

fn members(fams: &[GradedIdealFamily], n: u64) -> Result<Vec<MonomialIdeal>> {
    fams.iter().map(|f| f.member(n)).collect()
}

fn check_families(
    op: &'static str,
    ifam: Option<&GradedIdealFamily>,
    jfams: &[GradedIdealFamily],
) -> Result<usize> {
    let v = match (ifam, jfams.first()) {
        (Some(i), _) => i.num_vars(),
        (None, Some(j)) => j.num_vars(),
        (None, None) => return Err(Error::invalid(op, "no families given")),
    };
    for f in ifam.into_iter().chain(jfams) {
        Error::check_dim(op, v, f.num_vars())?;
        f.check_closure(DEFAULT_BOUND)?;
        f.check_growth(DEFAULT_BOUND)?;
    }
    Ok(v)
}

/// `lim_k dim(J_(kn) / I_(kn_0) J_(kn)) / k^d` by a tail fit over `k in [n_max/2, n_max]`.
pub fn bhattacharya_limit(
    ifam: &GradedIdealFamily,
    jfams: &[GradedIdealFamily],
    n0: u64,
    n: &[u64],
    n_max: u64,
) -> Result<f64> {
    let v = check_families("bhattacharya_limit", Some(ifam), jfams)?;
    Error::check_dim("bhattacharya_limit", jfams.len(), n.len())?;
    let start = (n_max / 2).max(1);
    let mut samples = Vec::new();
    let ones = vec![1u64; n.len()];
    for k in start..=n_max {
        let ip = ifam.member(k * n0)?;
        let jp: Vec<MonomialIdeal> = jfams
            .iter()
            .zip(n)
            .map(|(f, &ni)| f.member(k * ni))
            .collect::<Result<_>>()?;
        let count = Counter::new(&ip, &jp)?.count(1, &ones)?;
        samples.push((k as f64, count as f64));
    }
    Ok(leading_coefficient(&samples, v as u32))
}

fn fit_at(counter: &mut Counter, s: usize, big_d: u32, base: u64) -> Result<Option<Polynomial>> {
    let monomials = monomials_up_to(s + 1, big_d);
    let to_rat = |x: &[u64]| -> Vec<Rat> { x.iter().map(|&v| Rat::from_integer(Int::from(v))).collect() };
    let mut points = Vec::with_capacity(monomials.len());
    let mut values = Vec::with_capacity(monomials.len());
    for l in &monomials {
        let x: Vec<u64> = l.iter().map(|&v| base + v as u64).collect();
        values.push(Rat::from_integer(Int::from(counter.count(x[0], &x[1..])?)));
        points.push(to_rat(&x));
    }
    let coeffs = interpolate(&monomials, &points, &values).ok_or_else(|| {
        Error::internal("family_mixed_multiplicities", "singular interpolation grid")
    })?;
    let poly = Polynomial::new(s + 1, monomials.iter().cloned().zip(coeffs));
    for l in monomials_of_degree(s + 1, big_d + 1) {
        let x: Vec<u64> = l.iter().map(|&v| base + v as u64).collect();
        let c = Rat::from_integer(Int::from(counter.count(x[0], &x[1..])?));
        if poly.evaluate(&to_rat(&x)) != c {
            return Ok(None);
        }
    }
    Ok(Some(poly))
}

/// The polynomial `G(n_0, n)` of fixed ideals, fitted with the base point doubled until two fits agree.
fn bhattacharya_polynomial(ip: &MonomialIdeal, jp: &[MonomialIdeal]) -> Result<Polynomial> {
    let big_d = ip.num_vars() as u32;
    let mut counter = Counter::new(ip, jp)?;
    let mut previous: Option<Polynomial> = None;
    let mut base = 1u64;
    for _ in 0..MAX_DOUBLINGS {
        let fit = fit_at(&mut counter, jp.len(), big_d, base)?;
        if let (Some(p), Some(f)) = (&previous, &fit) {
            if p == f {
                return Ok(f.clone());
            }
        }
        previous = fit;
        base *= 2;
    }
    Err(Error::RegularityNotReached {
        op: "family_mixed_multiplicities",
        iterations: MAX_DOUBLINGS,
        previous: previous.map_or_else(|| "none".to_string(), |p| p.to_string()),
        last: fit_at(&mut counter, jp.len(), big_d, base)?
            .map_or_else(|| "none".to_string(), |p| p.to_string()),
    })
}

/// `e_(d_0, d)(I | J_1, ..., J_s)` of fixed ideals.
fn fixed_mixed_multiplicity(
    ip: &MonomialIdeal,
    jp: &[MonomialIdeal],
    d0: u32,
    d: &[u32],
) -> Result<Rat> {
    let g = bhattacharya_polynomial(ip, jp)?;
    let mut e = vec![d0 + 1];
    e.extend_from_slice(d);
    Ok(g.coefficient(&e) * Rat::from_integer(factorial(d0 + 1) * multi_factorial(d)))
}

fn check_type(op: &'static str, v: usize, d0: u32, d: &[u32]) -> Result<()> {
    if v == 0 || d0 + d.iter().sum::<u32>() != v as u32 - 1 {
        return Err(Error::invalid(
            op,
            format!("type ({d0}, {d:?}) must have total degree {}", v as i64 - 1),
        ));
    }
    Ok(())
}

/// `e_(d_0, d)` of graded families through the ladder `e(I_p | J_p) / p^d`.
pub fn family_mixed_multiplicities(
    ifam: &GradedIdealFamily,
    jfams: &[GradedIdealFamily],
    d0: u32,
    d: &[u32],
    schedule: &[u64],
) -> Result<MixedMultiplicityReport> {
    const OP: &str = "family_mixed_multiplicities";
    let v = check_families(OP, Some(ifam), jfams)?;
    Error::check_dim(OP, jfams.len(), d.len())?;
    check_type(OP, v, d0, d)?;
    if schedule.is_empty() || schedule.contains(&0) {
        return Err(Error::invalid(OP, "the p schedule must be nonempty and positive"));
    }
    let mut ladder = Vec::with_capacity(schedule.len());
    for &p in schedule {
        let ip = ifam.member(p)?;
        let jp = members(jfams, p)?;
        let e = fixed_mixed_multiplicity(&ip, &jp, d0, d)?;
        ladder.push(LadderEntry {
            p,
            value: e / Rat::from_integer(Int::from(p).pow(v as u32)),
        });
    }
    let all_powers = core::iter::once(ifam)
        .chain(jfams)
        .all(|f| matches!(f.rule(), super::FamilyRule::Powers(_)));
    let exact = if all_powers {
        let one = ladder.iter().find(|e| e.p == 1).map(|e| e.value.clone());
        match one {
            Some(x) => Some(x),
            None => Some(fixed_mixed_multiplicity(&ifam.member(1)?, &members(jfams, 1)?, d0, d)?),
        }
    } else {
        None
    };
    let mut full = vec![d0];
    full.extend_from_slice(d);
    Ok(ladder_report(full, ladder, exact, true))
}

/// Subset inequalities `sum_J d_j <= l(prod_J J_p) - 1` with `p` taken once
/// all analytic spreads repeat for two consecutive schedule entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPositivity {
    pub positive: bool,
    pub violated: Option<Vec<usize>>,
    pub p: u64,
    pub stabilized: bool,
    pub checks: Vec<SubsetCheck>,
}

fn subsets(s: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << s)).map(move |mask| (0..s).filter(|i| mask & (1 << i) != 0).collect())
}

pub fn family_positivity(
    jfams: &[GradedIdealFamily],
    d0: u32,
    d: &[u32],
    schedule: &[u64],
) -> Result<FamilyPositivity> {
    const OP: &str = "family_positivity";
    let v = check_families(OP, None, jfams)?;
    Error::check_dim(OP, jfams.len(), d.len())?;
    check_type(OP, v, d0, d)?;
    if schedule.is_empty() || schedule.contains(&0) {
        return Err(Error::invalid(OP, "the p schedule must be nonempty and positive"));
    }
    let s = jfams.len();
    let mut previous: Option<Vec<usize>> = None;
    let mut chosen = (schedule[0], Vec::new(), false);
    for &p in schedule {
        let jp = members(jfams, p)?;
        if let Some(i) = jp.iter().position(|j| j.homogeneous_degree().is_none()) {
            return Err(Error::unsupported(
                OP,
                format!("piece {p} of family {} is not generated in a single degree", i + 1),
            ));
        }
        let dims: Vec<usize> = subsets(s)
            .map(|sub| newton_dim(&sub.iter().map(|&i| &jp[i]).collect::<Vec<_>>()))
            .collect();
        let stable = previous.as_ref() == Some(&dims);
        chosen = (p, dims.clone(), stable);
        if stable {
            break;
        }
        previous = Some(dims);
    }
    let (p, dims, stabilized) = chosen;
    let checks: Vec<SubsetCheck> = subsets(s)
        .zip(dims)
        .map(|(sub, dim)| SubsetCheck {
            lhs: sub.iter().map(|&i| d[i] as u64).sum(),
            rhs: dim as i64,
            subset: sub.iter().map(|i| i + 1).collect(),
        })
        .collect();
    let violated = checks.iter().find(|c| !c.holds()).map(|c| c.subset.clone());
    Ok(FamilyPositivity {
        positive: violated.is_none(),
        violated,
        p,
        stabilized,
        checks,
    })
}

/// Both sides of `MV_d(K) = e_(0,d)(m | J(K_1), ..., J(K_s))`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedVolumeBridge {
    pub ideal: MixedMultiplicityReport,
    pub geometric_side: Rat,
    pub geometric_positivity: PositivityCertificate,
    pub ideal_positivity: FamilyPositivity,
}

impl MixedVolumeBridge {
    pub fn ideal_side(&self) -> f64 {
        self.ideal.value.to_f64()
    }

    /// `|ideal - geometric| / max(geometric, 1)`.
    pub fn rel_err(&self) -> f64 {
        let g = crate::num::to_f64(&self.geometric_side);
        (self.ideal_side() - g).abs() / g.max(1.0)
    }

    pub fn positivity_agrees(&self) -> bool {
        self.geometric_positivity.positive == self.ideal_positivity.positive
            && self.geometric_positivity.violated == self.ideal_positivity.violated
    }
}

fn sum_dim(bodies: &[&Polytope]) -> usize {
    let n = bodies.first().map_or(0, |b| b.ambient_dim());
    let mut span = RowSpan::new(n);
    for b in bodies {
        let vs = b.vertices();
        for w in &vs[1..] {
            span.insert(w.sub(&vs[0]).coords());
        }
    }
    span.rank()
}

/// Subset inequalities `sum_J d_j <= dim(sum_J K_j)`.
pub fn geometric_positivity(bodies: &[Polytope], d: &[u32]) -> Result<PositivityCertificate> {
    Error::check_dim("geometric_positivity", bodies.len(), d.len())?;
    let mut checks = Vec::new();
    for sub in subsets(bodies.len()) {
        let dim = sum_dim(&sub.iter().map(|&i| &bodies[i]).collect::<Vec<_>>());
        checks.push(SubsetCheck {
            lhs: sub.iter().map(|&i| d[i] as u64).sum(),
            rhs: dim as i64,
            subset: sub.iter().map(|i| i + 1).collect(),
        });
    }
    let violated = checks.iter().find(|c| !c.holds()).map(|c| c.subset.clone());
    Ok(PositivityCertificate {
        positive: violated.is_none(),
        violated,
        checks,
    })
}

pub fn mixed_volume_via_ideals(
    bodies: &[Polytope],
    d: &[u32],
    schedule: &[u64],
) -> Result<MixedVolumeBridge> {
    const OP: &str = "mixed_volume_via_ideals";
    let geometric_side = minkowski_polynomial(bodies)?.mixed_value(d);
    Error::check_dim(OP, bodies.len(), d.len())?;
    let geometric_positivity = geometric_positivity(bodies, d)?;
    let families: Vec<GradedIdealFamily> = bodies
        .iter()
        .map(|k| body_to_family(k, default_height(k)))
        .collect::<Result<_>>()?;
    let v = bodies[0].ambient_dim() + 1;
    let ideal =
        family_mixed_multiplicities(&GradedIdealFamily::m_adic(v), &families, 0, d, schedule)?;
    let ideal_positivity = family_positivity(&families, 0, d, schedule)?;
    Ok(MixedVolumeBridge {
        ideal,
        geometric_side,
        geometric_positivity,
        ideal_positivity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MixedValue, Provenance};
    use crate::num::rat;
    use crate::polytope::convex_hull;
    use crate::polytope::tests::pt;

    fn m(v: usize) -> MonomialIdeal {
        MonomialIdeal::maximal(v)
    }

    fn x_family() -> GradedIdealFamily {
        GradedIdealFamily::powers(MonomialIdeal::principal(vec![1, 0]))
    }

    fn body(vs: &[&[i64]]) -> Polytope {
        convex_hull(
            &vs.iter()
                .map(|v| pt(&v.iter().map(|&c| (c, 1)).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn staircase_quotients() {
        for b in 1..6u32 {
            let mb = m(2).power(b as u64);
            assert_eq!(quotient_dim(&MonomialIdeal::unit(2), &mb, b).unwrap(), (b * (b + 1) / 2) as u64);
            let xa = MonomialIdeal::principal(vec![3, 0]);
            assert_eq!(quotient_dim(&xa, &mb.product(&xa).unwrap(), b).unwrap(), (b * (b + 1) / 2) as u64);
        }
        for (n0, n1) in [(1u64, 1u64), (2, 3), (4, 0)] {
            let num = m(2).power(n1);
            let den = m(2).power(n0 + n1);
            let s = n0 + n1;
            assert_eq!(
                quotient_dim(&num, &den, n0 as u32).unwrap(),
                (s * (s + 1) - n1 * (n1 + 1)) / 2
            );
        }
    }

    #[test]
    fn quotient_errors() {
        let x = MonomialIdeal::principal(vec![1, 0]);
        assert!(matches!(
            quotient_dim(&x, &m(2), 4),
            Err(Error::NotContained { .. })
        ));
        let xy = MonomialIdeal::principal(vec![1, 1]);
        assert!(matches!(
            quotient_dim(&x, &xy, 5),
            Err(Error::CofinalityNotCertified { c: 5 })
        ));
    }

    #[test]
    fn generic_and_level_counts_agree() {
        let ip = m(3).power(2);
        let jp = vec![
            MonomialIdeal::new(3, vec![vec![2, 0, 0], vec![1, 1, 0]]).unwrap(),
            MonomialIdeal::new(3, vec![vec![0, 0, 1], vec![0, 1, 0]]).unwrap(),
        ];
        let mut fast = Counter::new(&ip, &jp).unwrap();
        assert!(matches!(fast, Counter::Levels { .. }));
        let mut slow = Counter::Generic { ip: &ip, jp: &jp, e: 2 };
        for n0 in 0..4 {
            for n in [[0u64, 0], [1, 2], [3, 1]] {
                assert_eq!(fast.count(n0, &n).unwrap(), slow.count(n0, &n).unwrap());
            }
        }
    }

    #[test]
    fn limits() {
        let mfam = GradedIdealFamily::m_adic(2);
        let a = bhattacharya_limit(&mfam, std::slice::from_ref(&mfam), 1, &[1], 100).unwrap();
        assert!((a - 1.5).abs() < 0.01, "{a}");
        let b = bhattacharya_limit(&mfam, &[x_family()], 1, &[1], 100).unwrap();
        assert!((b - 0.5).abs() < 0.01, "{b}");
        let c = bhattacharya_limit(&mfam, std::slice::from_ref(&mfam), 2, &[2], 60).unwrap();
        assert!((c - 6.0).abs() < 0.05, "{c}");
    }

    #[test]
    fn closed_form_multiplicities() {
        let mfam = GradedIdealFamily::m_adic(2);
        let sched = [1, 2, 4];
        let e10 = family_mixed_multiplicities(&mfam, std::slice::from_ref(&mfam), 1, &[0], &sched).unwrap();
        assert_eq!(e10.value, MixedValue::Exact(rat(1, 1)));
        assert!(e10.ladder.iter().all(|e| e.value == rat(1, 1)));
        let e01 = family_mixed_multiplicities(&mfam, std::slice::from_ref(&mfam), 0, &[1], &sched).unwrap();
        assert_eq!(e01.value, MixedValue::Exact(rat(1, 1)));
        let f10 = family_mixed_multiplicities(&mfam, &[x_family()], 1, &[0], &sched).unwrap();
        assert_eq!(f10.value, MixedValue::Exact(rat(1, 1)));
        let f01 = family_mixed_multiplicities(&mfam, &[x_family()], 0, &[1], &sched).unwrap();
        assert_eq!(f01.value, MixedValue::Exact(rat(0, 1)));
        assert_eq!(f01.provenance, Provenance::Exact);
        assert!(family_mixed_multiplicities(&mfam, std::slice::from_ref(&mfam), 1, &[1], &sched).is_err());
    }

    #[test]
    fn positivity_of_segments() {
        let e1 = body(&[&[0, 0], &[1, 0]]);
        let e2 = body(&[&[0, 0], &[0, 1]]);
        let fam = |k: &Polytope| body_to_family(k, 1).unwrap();
        let ok = family_positivity(&[fam(&e1), fam(&e2)], 0, &[1, 1], &[1, 2, 4]).unwrap();
        assert!(ok.positive);
        assert!(ok.stabilized);
        assert_eq!(ok.p, 2);
        let bad = family_positivity(&[fam(&e1), fam(&e1)], 0, &[1, 1], &[1, 2, 4]).unwrap();
        assert!(!bad.positive);
        assert_eq!(bad.violated, Some(vec![1, 2]));
        let vac = family_positivity(&[fam(&e1)], 2, &[0], &[1, 2]).unwrap();
        assert!(vac.positive);
    }

    #[test]
    fn bridge_examples() {
        let e1 = body(&[&[0, 0], &[1, 0]]);
        let e2 = body(&[&[0, 0], &[0, 1]]);
        let sched = [1, 2, 4];
        let r = mixed_volume_via_ideals(&[e1.clone(), e2], &[1, 1], &sched).unwrap();
        assert_eq!(r.geometric_side, rat(1, 1));
        assert!(r.rel_err() < 1e-12, "{r:?}");
        assert!(r.positivity_agrees());
        let r = mixed_volume_via_ideals(&[e1.clone(), e1], &[1, 1], &sched).unwrap();
        assert_eq!(r.geometric_side, rat(0, 1));
        assert!(r.rel_err() < 1e-12, "{r:?}");
        assert_eq!(r.geometric_positivity.violated, Some(vec![1, 2]));
        assert!(r.positivity_agrees());
        let sq = body(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tri = body(&[&[0, 0], &[1, 0], &[0, 1]]);
        let r = mixed_volume_via_ideals(&[sq, tri], &[1, 1], &sched).unwrap();
        assert_eq!(r.geometric_side, rat(2, 1));
        assert!(r.rel_err() < 0.05, "{r:?}");
        assert!(r.positivity_agrees());
    }
}
