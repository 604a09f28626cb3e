//! Certified real arithmetic: dyadic numbers (mantissa times a power of
//! two), intervals with outward rounding at a fixed precision, natural
//! logarithms by an atanh series with an enclosed truncation error, and
//! exact floor/ceil 64th roots.
//!
//! Every inequality decided through this module yields True, False, or
//! Undecided; a verdict is never silently wrong, only possibly undecided
//! at the working precision.

use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    True,
    False,
    Undecided,
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::True
    }
}

/// num · 2^exp, normalized so num is odd or zero.
#[derive(Clone, Debug)]
pub struct Dyadic {
    num: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            num: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn new(num: BigInt, exp: i64) -> Self {
        Dyadic { num, exp }.normalize()
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Dyadic::new(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::from_bigint(BigInt::from(n))
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.exp = 0;
        } else if let Some(tz) = self.num.trailing_zeros() {
            if tz > 0 {
                self.num >>= tz;
                self.exp += tz as i64;
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// magnitude bit length of the mantissa
    pub fn bits(&self) -> u64 {
        self.num.bits()
    }

    /// smallest e with |value| < 2^e; None for zero
    pub fn mag2_upper(&self) -> Option<i64> {
        if self.num.is_zero() {
            None
        } else {
            Some(self.num.bits() as i64 + self.exp)
        }
    }

    pub fn add(&self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.num << (self.exp - e) as u64;
        let b = &o.num << (o.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            num: -self.num.clone(),
            exp: self.exp,
        }
    }

    pub fn sub(&self, o: &Dyadic) -> Dyadic {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &o.num, self.exp + o.exp)
    }

    pub fn cmp(&self, o: &Dyadic) -> Ordering {
        match (self.num.sign(), o.num.sign()) {
            (Sign::Minus, Sign::NoSign) | (Sign::Minus, Sign::Plus) => return Ordering::Less,
            (Sign::NoSign, Sign::Plus) => return Ordering::Less,
            (Sign::Plus, Sign::Minus) | (Sign::Plus, Sign::NoSign) => return Ordering::Greater,
            (Sign::NoSign, Sign::Minus) => return Ordering::Greater,
            (Sign::NoSign, Sign::NoSign) => return Ordering::Equal,
            _ => {}
        }
        // same nonzero sign: compare magnitudes by exponent window first
        let sa = self.num.bits() as i64 + self.exp;
        let sb = o.num.bits() as i64 + o.exp;
        let sign_factor = if self.num.is_positive() { 1 } else { -1 };
        if sa != sb {
            let ord = sa.cmp(&sb);
            return if sign_factor == 1 { ord } else { ord.reverse() };
        }
        let e = self.exp.min(o.exp);
        let a = &self.num << (self.exp - e) as u64;
        let b = &o.num << (o.exp - e) as u64;
        a.cmp(&b)
    }

    /// round toward −∞, keeping at most prec mantissa bits
    pub fn round_down(&self, prec: u64) -> Dyadic {
        let bits = self.num.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        Dyadic::new(&self.num >> shift, self.exp + shift as i64)
    }

    /// round toward +∞, keeping at most prec mantissa bits
    pub fn round_up(&self, prec: u64) -> Dyadic {
        let bits = self.num.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        let shifted = -((-&self.num) >> shift);
        Dyadic::new(shifted, self.exp + shift as i64)
    }

    /// self / o rounded toward −∞ with about prec result bits; o nonzero
    pub fn div_down(&self, o: &Dyadic, prec: u64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let scale = o.num.bits() + prec + 2;
        let scaled = &self.num << scale;
        let q = scaled.div_floor(&o.num);
        Dyadic::new(q, self.exp - o.exp - scale as i64)
    }

    /// self / o rounded toward +∞
    pub fn div_up(&self, o: &Dyadic, prec: u64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let scale = o.num.bits() + prec + 2;
        let scaled = &self.num << scale;
        let q = scaled.div_ceil(&o.num);
        Dyadic::new(q, self.exp - o.exp - scale as i64)
    }

    /// bracket [floor, ceil] around value^(1/64) of a nonnegative dyadic,
    /// with at least prec significant bits; ends coincide on exact roots
    fn root64_bracket(&self, prec: u64) -> Result<(Dyadic, Dyadic)> {
        if self.is_negative() {
            return Err(Error::Domain("64th root of a negative number".into()));
        }
        if self.is_zero() {
            return Ok((Dyadic::zero(), Dyadic::zero()));
        }
        let bits = self.num.bits() as i64;
        let want = 64 * (prec as i64 + 2) - bits - self.exp;
        let q_prec = if want > 0 { (want + 63) / 64 } else { 0 };
        let q_exp = if self.exp < 0 { (-self.exp + 63) / 64 } else { 0 };
        let q = q_prec.max(q_exp);
        let shift = self.exp + 64 * q;
        let n: BigUint = self.num.magnitude() << shift as u64;
        let root = n.nth_root(64);
        let exact = num_traits::pow(root.clone(), 64) == n;
        let lo = Dyadic::new(BigInt::from(root.clone()), -q);
        let hi = if exact {
            lo.clone()
        } else {
            Dyadic::new(BigInt::from(root + 1u32), -q)
        };
        Ok((lo, hi))
    }

    /// approximate value for display; exact verdicts never rely on this
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.num.is_zero() {
            return 0.0;
        }
        let bits = self.num.bits();
        if bits <= 64 {
            let base = self.num.to_f64().unwrap_or(0.0);
            return libm::scalbn(base, clamp_i32(self.exp));
        }
        let shift = bits - 64;
        let top = (&self.num >> shift).to_f64().unwrap_or(0.0);
        libm::scalbn(top, clamp_i32(self.exp + shift as i64))
    }
}

fn clamp_i32(v: i64) -> i32 {
    v.clamp(i32::MIN as i64, i32::MAX as i64) as i32
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Dyadic {}

/// Closed enclosure [lo, hi].
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
}

impl Interval {
    pub fn point(d: Dyadic) -> Self {
        Interval { lo: d.clone(), hi: d }
    }

    pub fn zero() -> Self {
        Interval::point(Dyadic::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Interval::point(Dyadic::from_i64(n))
    }

    fn from_pair(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo.cmp(&hi) != Ordering::Greater);
        Interval { lo, hi }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64()
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64()
    }

    pub fn contains(&self, d: &Dyadic) -> bool {
        self.lo.cmp(d) != Ordering::Greater && self.hi.cmp(d) != Ordering::Less
    }

    /// certified self <= other
    pub fn le(&self, other: &Interval) -> Verdict {
        if self.hi.cmp(&other.lo) != Ordering::Greater {
            Verdict::True
        } else if self.lo.cmp(&other.hi) == Ordering::Greater {
            Verdict::False
        } else {
            Verdict::Undecided
        }
    }

    /// certified self < other
    pub fn lt(&self, other: &Interval) -> Verdict {
        if self.hi.cmp(&other.lo) == Ordering::Less {
            Verdict::True
        } else if self.lo.cmp(&other.hi) != Ordering::Less {
            Verdict::False
        } else {
            Verdict::Undecided
        }
    }

    pub fn ge(&self, other: &Interval) -> Verdict {
        other.le(self)
    }

    pub fn gt(&self, other: &Interval) -> Verdict {
        other.lt(self)
    }
}

/// Shared precision and the cached enclosure of ln 2.
pub struct RealCtx {
    prec: u64,
    ln2: Interval,
}

impl RealCtx {
    pub fn new(prec: u64) -> Self {
        let prec = prec.max(32);
        let mut ctx = RealCtx {
            prec,
            ln2: Interval::zero(),
        };
        // ln 2 = 2·atanh(1/3): (2−1)/(2+1) = 1/3
        let third = ctx.ratio(&BigInt::from(1), &BigInt::from(3));
        let a = ctx.atanh01(&third);
        ctx.ln2 = ctx.scale_pow2(&a, 1);
        ctx
    }

    pub fn prec(&self) -> u64 {
        self.prec
    }

    pub fn ln2(&self) -> &Interval {
        &self.ln2
    }

    fn out(&self, lo: Dyadic, hi: Dyadic) -> Interval {
        Interval::from_pair(lo.round_down(self.prec), hi.round_up(self.prec))
    }

    /// enclosure of p/q; q must be nonzero
    pub fn ratio(&self, p: &BigInt, q: &BigInt) -> Interval {
        let (p, q) = if q.is_negative() {
            (-p.clone(), -q.clone())
        } else {
            (p.clone(), q.clone())
        };
        let (a, b) = (Dyadic::from_bigint(p), Dyadic::from_bigint(q));
        self.out(
            a.div_down(&b, self.prec + 2),
            a.div_up(&b, self.prec + 2),
        )
    }

    pub fn add(&self, a: &Interval, b: &Interval) -> Interval {
        self.out(a.lo.add(&b.lo), a.hi.add(&b.hi))
    }

    pub fn sub(&self, a: &Interval, b: &Interval) -> Interval {
        self.out(a.lo.sub(&b.hi), a.hi.sub(&b.lo))
    }

    pub fn neg(&self, a: &Interval) -> Interval {
        Interval::from_pair(a.hi.neg(), a.lo.neg())
    }

    pub fn mul(&self, a: &Interval, b: &Interval) -> Interval {
        let c = [
            a.lo.mul(&b.lo),
            a.lo.mul(&b.hi),
            a.hi.mul(&b.lo),
            a.hi.mul(&b.hi),
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if v.cmp(&lo) == Ordering::Less {
                lo = v.clone();
            }
            if v.cmp(&hi) == Ordering::Greater {
                hi = v.clone();
            }
        }
        self.out(lo, hi)
    }

    /// exact scaling by 2^k
    pub fn scale_pow2(&self, a: &Interval, k: i64) -> Interval {
        let s = |d: &Dyadic| {
            if d.is_zero() {
                Dyadic::zero()
            } else {
                Dyadic::new(d.num.clone(), d.exp + k)
            }
        };
        Interval::from_pair(s(&a.lo), s(&a.hi))
    }

    /// a / b for a divisor interval strictly separated from zero
    pub fn div(&self, a: &Interval, b: &Interval) -> Result<Interval> {
        if b.lo.is_positive() {
            let lo1 = a.lo.div_down(&b.lo, self.prec + 2);
            let lo2 = a.lo.div_down(&b.hi, self.prec + 2);
            let hi1 = a.hi.div_up(&b.lo, self.prec + 2);
            let hi2 = a.hi.div_up(&b.hi, self.prec + 2);
            let lo = if lo1.cmp(&lo2) == Ordering::Less { lo1 } else { lo2 };
            let hi = if hi1.cmp(&hi2) == Ordering::Greater { hi1 } else { hi2 };
            Ok(self.out(lo, hi))
        } else if b.hi.is_negative() {
            let flipped = self.div(&self.neg(a), &self.neg(b))?;
            Ok(flipped)
        } else {
            Err(Error::Domain("division by an interval containing zero".into()))
        }
    }

    /// atanh on [0, 0.34]: truncated odd series plus an enclosed remainder
    fn atanh01(&self, t: &Interval) -> Interval {
        debug_assert!(!t.lo.is_negative());
        let t2 = self.mul(t, t);
        let mut pw = t.clone();
        let mut sum = Interval::zero();
        let mut k = 0u64;
        loop {
            let den = Dyadic::from_i64((2 * k + 1) as i64);
            let term = self.out(
                pw.lo.div_down(&den, self.prec + 2),
                pw.hi.div_up(&den, self.prec + 2),
            );
            sum = self.add(&sum, &term);
            pw = self.mul(&pw, &t2);
            k += 1;
            match pw.hi.mag2_upper() {
                Some(m) if m > -(self.prec as i64 + 6) && k < 4096 => {}
                _ => break,
            }
        }
        // remaining terms are bounded by the next power: for t <= 0.34 the
        // tail is at most pw/(2k+1) · 1/(1−t²) <= pw
        self.out(sum.lo, sum.hi.add(&pw.hi))
    }

    /// ln(a/b) + extra·ln 2 with a, b positive integers.  The reduction
    /// a/(b·2^j) in [1, 2) is done in exact integer arithmetic and the
    /// series argument (num−den)/(num+den) is formed before the single
    /// directed division, so ratios near one lose no relative precision.
    fn ln_scaled(&self, a: &BigUint, b: &BigUint, extra_pow2: i64) -> Result<Interval> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Domain("ln of a nonpositive ratio".into()));
        }
        let mut j = a.bits() as i64 - b.bits() as i64;
        let (mut num, den) = if j >= 0 {
            (a.clone(), b << j as u64)
        } else {
            (a << (-j) as u64, b.clone())
        };
        if num < den {
            num <<= 1;
            j -= 1;
        }
        debug_assert!(num >= den && num < (&den << 1u8));
        let tn = Dyadic::from_bigint(BigInt::from(&num - &den));
        let td = Dyadic::from_bigint(BigInt::from(&num + &den));
        let t = self.out(
            tn.div_down(&td, self.prec + 2),
            tn.div_up(&td, self.prec + 2),
        );
        let s = self.atanh01(&t);
        let ln_m = self.scale_pow2(&s, 1);
        let j_total = j + extra_pow2;
        if j_total == 0 {
            return Ok(ln_m);
        }
        let j_ln2 = self.mul(&Interval::from_int(j_total), &self.ln2);
        Ok(self.add(&ln_m, &j_ln2))
    }

    /// enclosure of ln at a positive dyadic point
    fn ln_point(&self, d: &Dyadic) -> Result<Interval> {
        if !d.is_positive() {
            return Err(Error::Domain("ln of a nonpositive number".into()));
        }
        self.ln_scaled(d.num.magnitude(), &BigUint::from(1u32), d.exp)
    }

    /// enclosure of ln over an interval with positive lower end
    pub fn ln(&self, x: &Interval) -> Result<Interval> {
        let lo = self.ln_point(&x.lo)?;
        let hi = self.ln_point(&x.hi)?;
        Ok(Interval::from_pair(lo.lo, hi.hi))
    }

    /// ln of an exact positive integer
    pub fn ln_int(&self, n: &BigUint) -> Result<Interval> {
        self.ln_scaled(n, &BigUint::from(1u32), 0)
    }

    /// ln(a/b) for exact positive integers, accurate in relative terms
    /// even when a/b is extremely close to one
    pub fn ln_ratio(&self, a: &BigUint, b: &BigUint) -> Result<Interval> {
        self.ln_scaled(a, b, 0)
    }

    pub fn log2(&self, x: &Interval) -> Result<Interval> {
        let l = self.ln(x)?;
        self.div(&l, &self.ln2)
    }

    /// enclosure of x^(1/64) for x >= 0
    pub fn root64(&self, x: &Interval) -> Result<Interval> {
        if x.lo.is_negative() {
            return Err(Error::Domain("64th root of a negative interval".into()));
        }
        let (lo, _) = x.lo.root64_bracket(self.prec)?;
        let (_, hi) = x.hi.root64_bracket(self.prec)?;
        Ok(Interval::from_pair(lo, hi))
    }
}

/// Exact small integer power of a dyadic.
pub fn dyadic_pow(d: &Dyadic, e: u32) -> Dyadic {
    let mut acc = Dyadic::from_i64(1);
    for _ in 0..e {
        acc = acc.mul(d);
    }
    acc
}
