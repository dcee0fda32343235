//! Minimal double-double arithmetic for phase-critical computations.
//!
//! The sums behind Z(t) need phases of the form t*ln(n) reduced mod 2*pi with
//! absolute error well below 1e-12 even when the raw product is of order 1e6.
//! Plain f64 carries ~1e-10 of rounding error through such a product, so the
//! few operations on that path are done in unevaluated hi+lo pairs.

/// Unevaluated sum of two doubles, `hi + lo` with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: returns (s, e) with s = fl(a+b) and a+b = s+e exactly.
#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum for |a| >= |b|.
#[inline]
pub(crate) fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product: returns (p, e) with p = fl(a*b) and a*b = p+e exactly.
#[inline]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = quick_two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        Dd::new(s, e + self.lo + rhs.lo)
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> Dd {
        let (s, e) = two_sum(self.hi, rhs);
        Dd::new(s, e + self.lo)
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(Dd {
            hi: -rhs.hi,
            lo: -rhs.lo,
        })
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p, e) = two_prod(self.hi, rhs);
        Dd::new(p, e + self.lo * rhs)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

pub(crate) const TWO_PI: Dd = Dd {
    hi: 6.283185307179586,
    lo: 2.4492935982947064e-16,
};

pub(crate) const LN_2PI: Dd = Dd {
    hi: 1.8378770664093456,
    lo: -7.756588316134483e-17,
};

/// Natural log of x as a hi+lo pair.
///
/// One Newton-style correction against exp: with L = fl(ln x), the residual
/// r = x*exp(-L) - 1 recovers ln(x) - L up to the relative error of exp
/// itself, leaving ~1e-16 absolute error in the pair instead of ~1e-16
/// relative to |ln x|.
#[inline]
pub(crate) fn dd_ln(x: f64) -> Dd {
    debug_assert!(x > 0.0 && x.is_finite());
    let l = x.ln();
    let e = (-l).exp();
    // fused multiply-add keeps x*e - 1 to one rounding of a near-zero result
    let r = x.mul_add(e, -1.0);
    // ln(1+r) ~ r - r^2/2; r is a few ulps so the quadratic term is ~1e-32
    Dd::new(l, r - 0.5 * r * r)
}

/// Reduces a double-double phase modulo 2*pi into [-pi, pi].
#[inline]
pub(crate) fn reduce_mod_2pi(p: Dd) -> f64 {
    let k = (p.hi / TWO_PI.hi).round();
    if k == 0.0 {
        return p.to_f64();
    }
    let (p1, e1) = two_prod(k, TWO_PI.hi);
    let (s, e2) = two_sum(p.hi, -p1);
    s + (e2 - e1 + p.lo - k * TWO_PI.lo)
}

/// Compensated (Kahan) accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}
