//! Closed-form constants and certified numeric inequalities: binary
//! entropy enclosures, binomial-versus-entropy bounds, the color-count
//! exponent threshold, the eta window used to pick a regularity
//! parameter, the parameter cascade, extension counts, and edge-count
//! envelopes for the balanced bipartite family.
//!
//! Real-valued checks go through [`crate::real`] and return a
//! [`Verdict`]; purely rational checks are decided exactly.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::bn_edge_count;
use crate::real::{Dyadic, Interval, RealCtx, Verdict};

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

fn big_iv(n: &BigUint) -> Interval {
    Interval::point(Dyadic::from_bigint(BigInt::from(n.clone())))
}

/// q·ln2·h(p/q): the entropy numerator before dividing out q and ln 2.
/// Callers handle the endpoints, so 0 < p < q here.
fn entropy_numerator(ctx: &RealCtx, p: &BigUint, q: &BigUint) -> Result<Interval> {
    let qp = q - p;
    let a = ctx.mul(&big_iv(p), &ctx.ln_ratio(q, p)?);
    let b = ctx.mul(&big_iv(&qp), &ctx.ln_ratio(q, &qp)?);
    Ok(ctx.add(&a, &b))
}

/// Binary entropy h(p/q) = −x·log2 x − (1−x)·log2(1−x); exact zero at the
/// endpoints, symmetric under p -> q−p by construction.
pub fn entropy(ctx: &RealCtx, p: &BigUint, q: &BigUint) -> Result<Interval> {
    if q.is_zero() || p > q {
        return Err(Error::Domain("entropy argument must lie in [0, 1]".into()));
    }
    if p.is_zero() || p == q {
        return Ok(Interval::zero());
    }
    let num = entropy_numerator(ctx, p, q)?;
    let scale = ctx.mul(&big_iv(q), ctx.ln2());
    ctx.div(&num, &scale)
}

/// Certifies h(x) <= −2x·log2 x for x = p/q in (0, 1/8].  Outside that
/// range the inequality is not claimed and the call is a domain error.
pub fn small_x_entropy_bound(ctx: &RealCtx, p: &BigUint, q: &BigUint) -> Result<Verdict> {
    if p.is_zero() || q.is_zero() || &(p * 8u32) > q {
        return Err(Error::Domain(
            "entropy comparison only holds on (0, 1/8]".into(),
        ));
    }
    // multiply both sides by q·ln2 > 0:
    //   (q−p)(ln q − ln(q−p)) <= p(ln q − ln p)
    let qp = q - p;
    let lhs = ctx.mul(&big_iv(&qp), &ctx.ln_ratio(q, &qp)?);
    let rhs = ctx.mul(&big_iv(p), &ctx.ln_ratio(q, p)?);
    Ok(lhs.le(&rhs))
}

/// Certifies C(n, floor(alpha·n)) <= 2^(h(alpha)·n) for alpha = p/q in
/// [0, 1]. The comparison is taken in logarithms scaled by q·ln2, so no
/// division is needed.
pub fn binom_entropy_bound(ctx: &RealCtx, n: u64, p: u64, q: u64) -> Result<Verdict> {
    if q == 0 || p > q {
        return Err(Error::Domain("alpha must lie in [0, 1]".into()));
    }
    if p == 0 || p == q {
        // C(n, 0) = C(n, n) = 1 and the bound is 2^0
        return Ok(Verdict::True);
    }
    let k = ((p as u128 * n as u128) / q as u128) as u64;
    let c = binomial(n, k);
    let lhs = ctx.mul(&big_iv(&BigUint::from(q)), &ctx.ln_int(&c)?);
    let inner = entropy_numerator(ctx, &BigUint::from(p), &BigUint::from(q))?;
    let rhs = ctx.mul(&Interval::from_int(n as i64), &inner);
    Ok(lhs.le(&rhs))
}

/// 492^64 · d^63 by binary exponentiation; the exponent of 6 defining the
/// color-count threshold for delta = 1/d.
pub fn r0_exponent(d: &BigUint) -> Result<BigUint> {
    if d.is_zero() {
        return Err(Error::Domain("delta denominator must be positive".into()));
    }
    Ok(BigUint::from(492u32).pow(64) * d.pow(63))
}

/// Same value by plain repeated multiplication; kept as an independent
/// route so the two can be compared bit for bit.
pub fn r0_exponent_naive(d: &BigUint) -> Result<BigUint> {
    if d.is_zero() {
        return Err(Error::Domain("delta denominator must be positive".into()));
    }
    let mut acc = BigUint::one();
    for _ in 0..64 {
        acc *= 492u32;
    }
    for _ in 0..63 {
        acc *= d;
    }
    Ok(acc)
}

/// 492^64 / delta^63 for a general rational delta = p/q, as an exact
/// rational.
pub fn r0_exponent_rational(p: &BigUint, q: &BigUint) -> Result<BigRational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::Domain("delta must be positive".into()));
    }
    let num = BigUint::from(492u32).pow(64) * q.pow(63);
    let den = p.pow(63);
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Window check for the regularity parameter eta against delta and r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaWindow {
    /// eta < delta / (4r), decided exactly
    pub separated: bool,
    /// delta/2 <= 243·(4h(r·eta) + 4r·eta)^(1/64)
    pub lower: Verdict,
    /// 243·(4h(r·eta) + 4r·eta)^(1/64) < 3·delta/4
    pub upper: Verdict,
}

fn require_positive(x: &BigRational, what: &str) -> Result<()> {
    if x.numer().is_positive() && x.denom().is_positive() {
        Ok(())
    } else {
        Err(Error::Domain(alloc::format!("{} must be positive", what)))
    }
}

/// 243·(4·h(t) + 4·t)^(1/64) for t = tn/td in (0, 1).
fn eta_mid(ctx: &RealCtx, tn: &BigUint, td: &BigUint) -> Result<Interval> {
    if tn.is_zero() || tn >= td {
        return Err(Error::Domain("r·eta must lie in (0, 1)".into()));
    }
    let h = entropy(ctx, tn, td)?;
    let t = ctx.ratio(&BigInt::from(tn.clone()), &BigInt::from(td.clone()));
    let u = ctx.scale_pow2(&ctx.add(&h, &t), 2);
    let root = ctx.root64(&u)?;
    Ok(ctx.mul(&Interval::from_int(243), &root))
}

pub fn eta_window_check(
    ctx: &RealCtx,
    delta: &BigRational,
    r: u64,
    eta: &BigRational,
) -> Result<EtaWindow> {
    require_positive(delta, "delta")?;
    require_positive(eta, "eta")?;
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    let (dn, dd) = (delta.numer().magnitude(), delta.denom().magnitude());
    let (en, ed) = (eta.numer().magnitude(), eta.denom().magnitude());
    // eta < delta/(4r):  en·4r·dd < dn·ed
    let separated = en * (4u64 * r) * dd < dn * ed;
    let mid = eta_mid(ctx, &(en * r), ed)?;
    let half = ctx.ratio(delta.numer(), &(delta.denom() * 2));
    let threeq = ctx.ratio(&(delta.numer() * 3), &(delta.denom() * 4));
    Ok(EtaWindow {
        separated,
        lower: half.le(&mid),
        upper: mid.lt(&threeq),
    })
}

/// Searches for eta = 2^-k satisfying all three window conditions.  The
/// middle expression decreases as k grows, so an exponential probe
/// followed by a binary search finds the upper transition, then a short
/// forward scan picks the first admissible k.
pub fn eta_window_solve(ctx: &RealCtx, delta: &BigRational, r: u64) -> Result<Option<u32>> {
    require_positive(delta, "delta")?;
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    let (dn, dd) = (delta.numer().magnitude(), delta.denom().magnitude());
    let threeq = ctx.ratio(&(delta.numer() * 3), &(delta.denom() * 4));
    let half = ctx.ratio(delta.numer(), &(delta.denom() * 2));
    let rn = BigUint::from(r);
    // mid(k) < 3delta/4, with domain failures treated as "not yet"
    let below = |k: u32| -> bool {
        let den = BigUint::one() << k;
        match eta_mid(ctx, &rn, &den) {
            Ok(m) => m.lt(&threeq) == Verdict::True,
            Err(_) => false,
        }
    };
    let mut hi = 1u32;
    while !below(hi) {
        if hi > (1 << 22) {
            return Ok(None);
        }
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let m = lo + (hi - lo) / 2;
        if below(m) {
            hi = m;
        } else {
            lo = m;
        }
    }
    for k in hi..hi.saturating_add(500) {
        let den = BigUint::one() << k;
        let mid = match eta_mid(ctx, &rn, &den) {
            Ok(m) => m,
            Err(_) => continue,
        };
        if half.le(&mid) == Verdict::False {
            return Ok(None); // window passed without a hit
        }
        let separated = BigUint::from(4u64 * r) * dd < dn * &den;
        if separated && half.le(&mid) == Verdict::True && mid.lt(&threeq) == Verdict::True {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Checks the descending chain of constants used by the stability
/// argument.  The first three are exact rational comparisons; the last
/// compares r against a tower too large to materialize, so it may come
/// back undecided in a narrow boundary band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeReport {
    /// gamma <= 1/1406
    pub gamma_small: bool,
    /// xi <= gamma^3 / 16
    pub xi_small: bool,
    /// delta < min(1/400^2, gamma^2/324, xi^3/36), all strict
    pub delta_small: bool,
    /// r > max(6^(492^64/delta^63), 21^64)
    pub r_large: Verdict,
}

pub fn check_constant_cascade(
    gamma: &BigRational,
    xi: &BigRational,
    delta: &BigRational,
    r: &BigUint,
) -> Result<CascadeReport> {
    require_positive(gamma, "gamma")?;
    require_positive(xi, "xi")?;
    require_positive(delta, "delta")?;
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let gamma_small = *gamma <= rat(1, 1406);
    let xi_small = *xi <= gamma * gamma * gamma / rat(16, 1);
    let delta_small = *delta < rat(1, 400 * 400)
        && *delta < gamma * gamma / rat(324, 1)
        && *delta < xi * xi * xi / rat(36, 1);
    let r_large = r_exceeds_threshold(delta, r);
    Ok(CascadeReport {
        gamma_small,
        xi_small,
        delta_small,
        r_large,
    })
}

/// r > max(6^E, 21^64) with E = 492^64/delta^63.  6^E > 4^E, so whenever
/// r has at most 2·floor(E) bits the answer is certainly no; otherwise
/// floor(E) is small enough to materialize 6^E exactly.
fn r_exceeds_threshold(delta: &BigRational, r: &BigUint) -> Verdict {
    if *r <= BigUint::from(21u32).pow(64) {
        return Verdict::False;
    }
    let dn = delta.numer().magnitude();
    let dd = delta.denom().magnitude();
    let num = BigUint::from(492u32).pow(64) * dd.pow(63);
    let den = dn.pow(63);
    let e_floor = &num / &den;
    if BigUint::from(r.bits()) <= 2u32 * &e_floor {
        return Verdict::False;
    }
    // e_floor < bits(r)/2 here; refuse to materialize absurd towers
    let e = match u64::try_from(&e_floor) {
        Ok(e) if e <= (1 << 26) => e as u32,
        _ => return Verdict::Undecided,
    };
    let six_e = BigUint::from(6u32).pow(e);
    if (&num % &den).is_zero() {
        if *r > six_e {
            Verdict::True
        } else {
            Verdict::False
        }
    } else if *r > &six_e * 6u32 {
        Verdict::True
    } else if *r <= six_e {
        Verdict::False
    } else {
        Verdict::Undecided
    }
}

/// Exact extension counts: 18·r^3 colored completions through a fixed
/// pair, and 21·r^5 for the five-edge case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCounts {
    pub q: BigUint,
    pub fano_case_b: BigUint,
}

pub fn extension_counts(r: u64) -> Result<ExtensionCounts> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    let rb = BigUint::from(r);
    Ok(ExtensionCounts {
        q: 18u32 * rb.pow(3),
        fano_case_b: 21u32 * rb.pow(5),
    })
}

/// Exact rational envelope around the edge count of the balanced
/// bipartite construction: (n^3 − 2n^2 − n + 2)/8 below, (n^3 − 2n^2)/8
/// above; the lower end is attained at odd n, the upper at even n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCountBounds {
    pub lower: BigRational,
    pub exact: u64,
    pub upper: BigRational,
}

pub fn bn_edge_bounds(n: u16) -> EdgeCountBounds {
    let nb = BigInt::from(n);
    let n2 = &nb * &nb;
    let n3 = &n2 * &nb;
    let eight = BigInt::from(8);
    let lower = BigRational::new(&n3 - 2 * &n2 - &nb + 2, eight.clone());
    let upper = BigRational::new(&n3 - 2 * &n2, eight);
    EdgeCountBounds {
        lower,
        exact: bn_edge_count(n),
        upper,
    }
}

/// Quadratic lower bound (1/6)·((2 − 240·gamma)/80)·n^2 on the number of
/// deletions forced in the sparse case; signed, zero at gamma = 1/120.
pub fn deletion_lower_bound(gamma: &BigRational, n: u64) -> Result<BigRational> {
    require_positive(gamma, "gamma")?;
    let two = BigRational::from_integer(BigInt::from(2));
    let coeff = two - BigRational::from_integer(BigInt::from(240)) * gamma;
    let n2 = BigRational::from_integer(BigInt::from(n) * BigInt::from(n));
    Ok(coeff * n2 / BigRational::from_integer(BigInt::from(480)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> RealCtx {
        RealCtx::new(256)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn entropy_endpoints_and_center() {
        let c = ctx();
        let zero = entropy(&c, &BigUint::zero(), &BigUint::from(5u32)).unwrap();
        assert_eq!(zero, Interval::zero());
        let one_end = entropy(&c, &BigUint::from(5u32), &BigUint::from(5u32)).unwrap();
        assert_eq!(one_end, Interval::zero());
        let half = entropy(&c, &BigUint::from(1u32), &BigUint::from(2u32)).unwrap();
        let one = Interval::from_int(1);
        assert!(half.contains(one.lo()));
        assert!((half.lo_f64() - 1.0).abs() < 1e-15);
        assert!(entropy(&c, &BigUint::from(3u32), &BigUint::from(2u32)).is_err());
    }

    #[test]
    fn entropy_eighth_matches_frozen_value() {
        let c = ctx();
        let h = entropy(&c, &BigUint::from(1u32), &BigUint::from(8u32)).unwrap();
        assert!((h.lo_f64() - 0.5435644431995964).abs() < 1e-12);
        assert!((h.hi_f64() - 0.5435644431995964).abs() < 1e-12);
    }

    #[test]
    fn entropy_is_symmetric() {
        let c = ctx();
        for (p, q) in [(1u32, 8u32), (3, 10), (2, 7), (5, 11)] {
            let a = entropy(&c, &BigUint::from(p), &BigUint::from(q)).unwrap();
            let b = entropy(&c, &BigUint::from(q - p), &BigUint::from(q)).unwrap();
            assert_eq!(a, b, "h({p}/{q}) vs h({}/{q})", q - p);
        }
    }

    #[test]
    fn small_x_bound_holds_on_domain() {
        let c = ctx();
        // strict at the right endpoint 1/8
        assert_eq!(
            small_x_entropy_bound(&c, &BigUint::from(1u32), &BigUint::from(8u32)).unwrap(),
            Verdict::True
        );
        // strictness visible by comparing the sides directly
        let x = c.ratio(&BigInt::from(1), &BigInt::from(8));
        let lhs = entropy(&c, &BigUint::from(1u32), &BigUint::from(8u32)).unwrap();
        let rhs = c.mul(
            &c.scale_pow2(&x, 1),
            &c.neg(&c.log2(&x).unwrap()),
        );
        assert_eq!(lhs.lt(&rhs), Verdict::True);
        // a very small x
        assert_eq!(
            small_x_entropy_bound(&c, &BigUint::from(1u32), &BigUint::from(1_000_000u32))
                .unwrap(),
            Verdict::True
        );
        // outside the stated range the claim is refused
        assert!(small_x_entropy_bound(&c, &BigUint::from(1u32), &BigUint::from(4u32)).is_err());
        assert!(small_x_entropy_bound(&c, &BigUint::zero(), &BigUint::from(8u32)).is_err());
    }

    #[test]
    fn small_x_bound_on_grid() {
        let c = ctx();
        // coarse grid here; the acceptance run sweeps 10^5 points
        let den = 8_000u32;
        for k in 1..=1_000u32 {
            let v = small_x_entropy_bound(&c, &BigUint::from(k), &BigUint::from(den)).unwrap();
            assert_eq!(v, Verdict::True, "x = {k}/{den}");
        }
    }

    #[test]
    fn binom_bound_examples() {
        let c = ctx();
        // C(10,5) = 252 <= 2^10
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binom_entropy_bound(&c, 10, 1, 2).unwrap(), Verdict::True);
        assert_eq!(binom_entropy_bound(&c, 10, 0, 1).unwrap(), Verdict::True);
        assert_eq!(binom_entropy_bound(&c, 64, 1, 4).unwrap(), Verdict::True);
        assert_eq!(binom_entropy_bound(&c, 7, 1, 1).unwrap(), Verdict::True);
        assert!(binom_entropy_bound(&c, 10, 3, 2).is_err());
    }

    #[test]
    fn binom_bound_sweep() {
        let c = ctx();
        for n in 1..=60u64 {
            for k in 0..=n {
                let v = binom_entropy_bound(&c, n, k, n).unwrap();
                assert_eq!(v, Verdict::True, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn r0_exponent_routes_agree() {
        for d in [1u32, 2, 37, 1406] {
            let d = BigUint::from(d);
            assert_eq!(r0_exponent(&d).unwrap(), r0_exponent_naive(&d).unwrap());
        }
        assert!(r0_exponent(&BigUint::zero()).is_err());
    }

    #[test]
    fn r0_exponent_pinned_value() {
        // d = 37·16^3·1406^9
        let d = BigUint::from(37u32)
            * BigUint::from(16u32).pow(3)
            * BigUint::from(1406u32).pow(9);
        assert_eq!(d.to_string(), "3254089984427359189844114530107392");
        let e = r0_exponent(&d).unwrap();
        assert_eq!(e, r0_exponent_naive(&d).unwrap());
        let s = e.to_string();
        assert_eq!(s.len(), 2284);
        assert!(s.starts_with("370534578672044398109939411131"));
        assert!(s.ends_with("6866792448"));
    }

    #[test]
    fn r0_exponent_rational_form() {
        // delta = 2/3: 492^64·3^63/2^63
        let v = r0_exponent_rational(&BigUint::from(2u32), &BigUint::from(3u32)).unwrap();
        let expect = BigRational::new(
            BigInt::from(BigUint::from(492u32).pow(64) * BigUint::from(3u32).pow(63)),
            BigInt::from(BigUint::from(2u32).pow(63)),
        );
        assert_eq!(v, expect);
        // reciprocal delta reduces to the integer route
        let w = r0_exponent_rational(&BigUint::one(), &BigUint::from(5u32)).unwrap();
        assert_eq!(
            w,
            BigRational::from_integer(BigInt::from(
                r0_exponent(&BigUint::from(5u32)).unwrap()
            ))
        );
    }

    #[test]
    fn eta_mid_decreases_in_k() {
        let c = ctx();
        let r = BigUint::from(1_000_000u64);
        let mut prev: Option<Interval> = None;
        for k in [1150u32, 1180, 1210, 1240, 1270] {
            let den = BigUint::one() << k;
            let m = eta_mid(&c, &r, &den).unwrap();
            if let Some(p) = prev {
                assert_eq!(m.lt(&p), Verdict::True, "k = {k}");
            }
            prev = Some(m);
        }
    }

    #[test]
    fn eta_solver_finds_window() {
        let c = ctx();
        let delta = rat(1, 1000);
        let k = eta_window_solve(&c, &delta, 1_000_000).unwrap().unwrap();
        // regression pin: the first admissible exponent for this input
        assert_eq!(k, 1204);
        let eta = BigRational::new(BigInt::one(), BigInt::one() << k);
        let w = eta_window_check(&c, &delta, 1_000_000, &eta).unwrap();
        assert!(w.separated);
        assert_eq!(w.lower, Verdict::True);
        assert_eq!(w.upper, Verdict::True);
        // one step before the window the middle expression is still too big
        let before = BigRational::new(BigInt::one(), BigInt::one() << (k - 40));
        let wb = eta_window_check(&c, &delta, 1_000_000, &before).unwrap();
        assert_eq!(wb.upper, Verdict::False);
        // far past the window it has dropped below delta/2
        let after = BigRational::new(BigInt::one(), BigInt::one() << (k + 80));
        let wa = eta_window_check(&c, &delta, 1_000_000, &after).unwrap();
        assert_eq!(wa.lower, Verdict::False);
    }

    #[test]
    fn eta_check_rejects_bad_inputs() {
        let c = ctx();
        assert!(eta_window_check(&c, &rat(1, 1000), 0, &rat(1, 10)).is_err());
        assert!(eta_window_check(&c, &rat(1, 1000), 4, &rat(1, 2)).is_err()); // r·eta = 2
        assert!(eta_window_check(&c, &rat(0, 1), 4, &rat(1, 10)).is_err());
    }

    #[test]
    fn cascade_pinned_constants_pass() {
        let gamma = rat(1, 1406);
        let xi = &gamma * &gamma * &gamma / rat(16, 1);
        let dd = BigInt::from(37u32)
            * BigInt::from(16u32).pow(3)
            * BigInt::from(1406u32).pow(9);
        let delta = BigRational::new(BigInt::one(), dd);
        let rep =
            check_constant_cascade(&gamma, &xi, &delta, &BigUint::from(10u32)).unwrap();
        assert!(rep.gamma_small && rep.xi_small && rep.delta_small);
        assert_eq!(rep.r_large, Verdict::False); // 10 is nowhere near the tower
    }

    #[test]
    fn cascade_rejects_out_of_range_constants() {
        let xi = rat(1, 100_000_000_000);
        let delta = rat(1, 1_000_000_000_000_000_000);
        let rep = check_constant_cascade(&rat(1, 1000), &xi, &delta, &BigUint::from(10u32))
            .unwrap();
        assert!(!rep.gamma_small);
        // delta = xi^3/36 exactly fails the strict comparison
        let gamma = rat(1, 1406);
        let xi = &gamma * &gamma * &gamma / rat(16, 1);
        let delta = &xi * &xi * &xi / rat(36, 1);
        let rep = check_constant_cascade(&gamma, &xi, &delta, &BigUint::from(10u32)).unwrap();
        assert!(rep.gamma_small && rep.xi_small && !rep.delta_small);
    }

    #[test]
    fn cascade_r_comparison_semantics() {
        let gamma = rat(1, 1406);
        let xi = &gamma * &gamma * &gamma / rat(16, 1);
        // delta = 492 makes the exponent exactly 492^64/492^63 = 492
        let delta = rat(492, 1);
        let six = BigUint::from(6u32);
        let r_big = six.pow(492) * 2u32;
        let rep = check_constant_cascade(&gamma, &xi, &delta, &r_big).unwrap();
        assert_eq!(rep.r_large, Verdict::True);
        let rep = check_constant_cascade(&gamma, &xi, &delta, &six.pow(492)).unwrap();
        assert_eq!(rep.r_large, Verdict::False);
        // 21^64 dominates small r regardless of delta
        let rep = check_constant_cascade(&gamma, &xi, &delta, &BigUint::from(u64::MAX))
            .unwrap();
        assert_eq!(rep.r_large, Verdict::False);
        // non-integral exponent: delta = 500 gives E = 492^64/500^63,
        // roughly 177 with a fractional part; r = 6^(floor(E)+1) lands in
        // the one-step gap where the comparison cannot be decided exactly
        let num = BigUint::from(492u32).pow(64);
        let den = BigUint::from(500u32).pow(63);
        assert!(!(&num % &den).is_zero());
        let fl = u64::try_from(&(&num / &den)).unwrap() as u32;
        assert!(fl > 110, "floor exponent keeps 6^fl above 21^64");
        let delta = rat(500, 1);
        let in_gap = BigUint::from(6u32).pow(fl + 1);
        let rep = check_constant_cascade(&gamma, &xi, &delta, &in_gap).unwrap();
        assert_eq!(rep.r_large, Verdict::Undecided);
        let above = &in_gap * 6u32;
        let rep = check_constant_cascade(&gamma, &xi, &delta, &above).unwrap();
        assert_eq!(rep.r_large, Verdict::True);
        let below = BigUint::from(6u32).pow(fl);
        let rep = check_constant_cascade(&gamma, &xi, &delta, &below).unwrap();
        assert_eq!(rep.r_large, Verdict::False);
    }

    #[test]
    fn extension_count_examples() {
        let e = extension_counts(2).unwrap();
        assert_eq!(e.q, BigUint::from(144u32));
        assert_eq!(e.fano_case_b, BigUint::from(672u32));
        let e = extension_counts(1).unwrap();
        assert_eq!(e.q, BigUint::from(18u32));
        assert_eq!(e.fano_case_b, BigUint::from(21u32));
        let e = extension_counts(1_000_000).unwrap();
        assert_eq!(e.q, BigUint::from(18u64 * 10u64.pow(18)));
        assert_eq!(
            e.fano_case_b,
            BigUint::from(21u32) * BigUint::from(10u64.pow(15)).pow(2)
        );
        assert!(extension_counts(0).is_err());
    }

    #[test]
    fn bn_edge_envelope() {
        let b7 = bn_edge_bounds(7);
        assert_eq!(b7.exact, 30);
        assert_eq!(b7.lower, BigRational::from_integer(BigInt::from(30)));
        assert_eq!(b7.upper, rat(245, 8));
        let b8 = bn_edge_bounds(8);
        assert_eq!(b8.exact, 48);
        assert_eq!(b8.lower, rat(378, 8));
        assert_eq!(b8.upper, BigRational::from_integer(BigInt::from(48)));
        for n in 3..=400u16 {
            let b = bn_edge_bounds(n);
            let exact = BigRational::from_integer(BigInt::from(b.exact));
            assert!(b.lower <= exact && exact <= b.upper, "n = {n}");
            if n % 2 == 1 {
                assert_eq!(b.lower, exact, "odd n = {n} attains the lower end");
            } else {
                assert_eq!(b.upper, exact, "even n = {n} attains the upper end");
            }
        }
        // below the asserted range the values are still reported
        let b1 = bn_edge_bounds(1);
        assert_eq!(b1.exact, 0);
    }

    #[test]
    fn deletion_bound_values() {
        // gamma = 1/1406, n = 1406: (2·1406 − 240)·1406/480 = 452029/60
        let v = deletion_lower_bound(&rat(1, 1406), 1406).unwrap();
        assert_eq!(v, rat(452_029, 60));
        let z = deletion_lower_bound(&rat(1, 120), 100).unwrap();
        assert!(z.is_zero());
        let zero_n = deletion_lower_bound(&rat(1, 1406), 0).unwrap();
        assert!(zero_n.is_zero());
        // past 1/120 the bound goes negative
        let neg = deletion_lower_bound(&rat(1, 100), 10).unwrap();
        assert!(neg.is_negative());
        assert!(deletion_lower_bound(&rat(0, 1), 5).is_err());
    }

    #[test]
    fn binomial_wrapper() {
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        // Pascal identity on a large entry
        assert_eq!(
            binomial(200, 100),
            binomial(199, 99) + binomial(199, 100)
        );
        assert_eq!(binomial(200, 100).to_string().len(), 59);
    }
}
