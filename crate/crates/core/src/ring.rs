//! Exact arithmetic in the commutative ring R = Q(i)[c, k] / (k^2 = c^2 - c).
//!
//! Every entry of a deformation matrix lives in R.  An element is stored as a
//! pair of univariate polynomials in `c` with Gaussian-rational coefficients,
//! representing `p(c) + k*q(c)`; the quotient relation `k^2 = c^2 - c` is
//! rewritten away on every multiplication, so the k-degree never exceeds 1.

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Gaussian rational: re + i*im with exact rational parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn zero() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussRat {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        assert!(!n.is_zero(), "division by zero GaussRat");
        GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().expect("rational out of f64 range"),
            self.im.to_f64().expect("rational out of f64 range"),
        )
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

/// Polynomial in `c` over the Gaussian rationals, coefficients ascending,
/// no trailing zeros; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPoly(Vec<GaussRat>);

impl CPoly {
    pub fn zero() -> Self {
        CPoly(Vec::new())
    }

    pub fn constant(a: GaussRat) -> Self {
        CPoly::from_coeffs(vec![a])
    }

    /// The monomial `c`.
    pub fn c() -> Self {
        CPoly(vec![GaussRat::zero(), GaussRat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().map_or(false, GaussRat::is_zero) {
            coeffs.pop();
        }
        CPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> GaussRat {
        self.0.get(i).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn conj(&self) -> Self {
        CPoly(self.0.iter().map(GaussRat::conj).collect())
    }

    pub fn scale(&self, a: &GaussRat) -> Self {
        CPoly::from_coeffs(self.0.iter().map(|x| x * a).collect())
    }

    pub fn eval_rat(&self, x: &BigRational) -> GaussRat {
        let mut acc = GaussRat::zero();
        for co in self.0.iter().rev() {
            acc = &GaussRat {
                re: &acc.re * x,
                im: &acc.im * x,
            } + co;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for co in self.0.iter().rev() {
            acc = acc * x + co.to_complex();
        }
        acc
    }

    /// Euclidean division over the field Q(i); panics on zero divisor.
    pub fn div_rem(&self, div: &CPoly) -> (CPoly, CPoly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let mut rem = self.0.clone();
        while rem.last().map_or(false, GaussRat::is_zero) {
            rem.pop();
        }
        let dd = div.degree();
        let lead_inv = div.0[dd].recip();
        let mut quo = vec![GaussRat::zero(); rem.len().saturating_sub(dd)];
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1] * &lead_inv;
            for (j, dco) in div.0.iter().enumerate() {
                let t = &factor * dco;
                rem[k + j] = &rem[k + j] - &t;
            }
            while rem.last().map_or(false, GaussRat::is_zero) {
                rem.pop();
            }
            quo[k] = factor;
        }
        (CPoly::from_coeffs(quo), CPoly::from_coeffs(rem))
    }
}

impl Add for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        let n = self.0.len().max(rhs.0.len());
        CPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        let n = self.0.len().max(rhs.0.len());
        CPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &CPoly) -> CPoly {
        if self.is_zero() || rhs.is_zero() {
            return CPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        CPoly::from_coeffs(out)
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly(self.0.iter().map(|x| -x).collect())
    }
}

/// Element of R = Q(i)[c, k] / (k^2 = c^2 - c), stored as `p(c) + k*q(c)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingScalar {
    pub p: CPoly,
    pub q: CPoly,
}

impl RingScalar {
    pub fn zero() -> Self {
        RingScalar {
            p: CPoly::zero(),
            q: CPoly::zero(),
        }
    }

    pub fn one() -> Self {
        RingScalar {
            p: CPoly::constant(GaussRat::one()),
            q: CPoly::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RingScalar {
            p: CPoly::constant(GaussRat::from_int(n)),
            q: CPoly::zero(),
        }
    }

    pub fn from_gauss(a: GaussRat) -> Self {
        RingScalar {
            p: CPoly::constant(a),
            q: CPoly::zero(),
        }
    }

    /// The generator `c` (evaluates to cosh(eps)).
    pub fn c() -> Self {
        RingScalar {
            p: CPoly::c(),
            q: CPoly::zero(),
        }
    }

    /// The generator `k` (evaluates to sqrt(c^2 - c) >= 0).
    pub fn kappa() -> Self {
        RingScalar {
            p: CPoly::zero(),
            q: CPoly::constant(GaussRat::one()),
        }
    }

    pub fn i() -> Self {
        RingScalar::from_gauss(GaussRat::i())
    }

    /// lambda_0 = 1 - c.
    pub fn lambda0() -> Self {
        &RingScalar::one() - &RingScalar::c()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// True when the kappa-component vanishes identically.
    pub fn is_kappa_free(&self) -> bool {
        self.q.is_zero()
    }

    /// Complex conjugation: conjugates the Gaussian coefficients of both
    /// components; `c` and `k` are treated as real symbols.
    pub fn conj(&self) -> Self {
        RingScalar {
            p: self.p.conj(),
            q: self.q.conj(),
        }
    }

    /// The kappa-conjugate p - k*q; the product with it lands in Q(i)[c].
    pub fn kappa_conj(&self) -> Self {
        RingScalar {
            p: self.p.clone(),
            q: -&self.q,
        }
    }

    /// Combined degree in c, used for pivot selection.
    pub fn degree(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let dp = if self.p.is_zero() { 0 } else { self.p.degree() };
        let dq = if self.q.is_zero() { 0 } else { self.q.degree() + 1 };
        dp.max(dq)
    }

    /// Numeric evaluation at real eps: c = cosh(eps), k = sqrt(c^2 - c).
    pub fn eval(&self, eps: f64) -> Complex64 {
        let c0 = eps.cosh();
        let k0 = (c0 * c0 - c0).max(0.0).sqrt();
        self.p.eval_f64(c0) + self.q.eval_f64(c0) * k0
    }

    /// Exact value at the undeformed limit c = 1 (where k = 0).
    pub fn eval_limit(&self) -> GaussRat {
        self.p.eval_rat(&BigRational::one())
    }

    /// Exact quotient, or None when the division does not land in R.
    pub fn exact_div(&self, rhs: &RingScalar) -> Option<RingScalar> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(RingScalar::zero());
        }
        // a / b = a * kconj(b) / (b * kconj(b)); the denominator is in Q(i)[c].
        let num = self * &rhs.kappa_conj();
        let den = (rhs * &rhs.kappa_conj()).p;
        let (pq, pr) = num.p.div_rem(&den);
        if !pr.is_zero() {
            return None;
        }
        let (qq, qr) = num.q.div_rem(&den);
        if !qr.is_zero() {
            return None;
        }
        Some(RingScalar { p: pq, q: qq })
    }

    /// Is this the constant +1 or -1?
    pub fn is_plus_minus_one(&self) -> bool {
        *self == RingScalar::one() || *self == -&RingScalar::one()
    }
}

// k^2 rewrites to c^2 - c.
fn kappa_squared() -> CPoly {
    CPoly::from_coeffs(vec![
        GaussRat::zero(),
        GaussRat::from_int(-1),
        GaussRat::one(),
    ])
}

impl Add for &RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: &RingScalar) -> RingScalar {
        RingScalar {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Sub for &RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: &RingScalar) -> RingScalar {
        RingScalar {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }
}

impl Mul for &RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: &RingScalar) -> RingScalar {
        // (p1 + k q1)(p2 + k q2) = p1 p2 + (c^2 - c) q1 q2 + k (p1 q2 + q1 p2)
        let ks = kappa_squared();
        RingScalar {
            p: &(&self.p * &rhs.p) + &(&(&self.q * &rhs.q) * &ks),
            q: &(&self.p * &rhs.q) + &(&self.q * &rhs.p),
        }
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        RingScalar {
            p: -&self.p,
            q: -&self.q,
        }
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn poly_str(p: &CPoly) -> String {
            if p.is_zero() {
                return "0".into();
            }
            let mut parts = Vec::new();
            for (d, co) in p.coeffs().iter().enumerate() {
                if co.is_zero() {
                    continue;
                }
                let co_s = if co.im.is_zero() {
                    format!("{}", co.re)
                } else if co.re.is_zero() {
                    format!("{}i", co.im)
                } else {
                    format!("({}{}{}i)", co.re, if co.im.is_negative() { "" } else { "+" }, co.im)
                };
                let term = match d {
                    0 => co_s,
                    1 => format!("{}*c", co_s),
                    _ => format!("{}*c^{}", co_s, d),
                };
                parts.push(term);
            }
            parts.join(" + ")
        }
        if self.q.is_zero() {
            write!(f, "{}", poly_str(&self.p))
        } else if self.p.is_zero() {
            write!(f, "k*({})", poly_str(&self.q))
        } else {
            write!(f, "{} + k*({})", poly_str(&self.p), poly_str(&self.q))
        }
    }
}

// JSON form: {"p": [[re_num, re_den, im_num, im_den], ...], "q": [...]},
// coefficient lists in ascending degree.

fn bigint_to_i64<S: Serializer>(x: &BigInt) -> Result<i64, S::Error> {
    x.to_i64()
        .ok_or_else(|| serde::ser::Error::custom("coefficient exceeds i64 range"))
}

impl Serialize for RingScalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        fn poly_rows<S: Serializer>(p: &CPoly) -> Result<Vec<[i64; 4]>, S::Error> {
            p.coeffs()
                .iter()
                .map(|g| {
                    Ok([
                        bigint_to_i64::<S>(g.re.numer())?,
                        bigint_to_i64::<S>(g.re.denom())?,
                        bigint_to_i64::<S>(g.im.numer())?,
                        bigint_to_i64::<S>(g.im.denom())?,
                    ])
                })
                .collect()
        }
        #[derive(Serialize)]
        struct Repr {
            p: Vec<[i64; 4]>,
            q: Vec<[i64; 4]>,
        }
        Repr {
            p: poly_rows::<S>(&self.p)?,
            q: poly_rows::<S>(&self.q)?,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RingScalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            p: Vec<[i64; 4]>,
            q: Vec<[i64; 4]>,
        }
        let r = Repr::deserialize(de)?;
        let build = |rows: Vec<[i64; 4]>| -> Result<CPoly, D::Error> {
            let coeffs = rows
                .into_iter()
                .map(|[rn, rd, im, id]| {
                    if rd == 0 || id == 0 {
                        return Err(D::Error::custom("zero denominator"));
                    }
                    Ok(GaussRat::from_parts(rn, rd, im, id))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CPoly::from_coeffs(coeffs))
        };
        Ok(RingScalar {
            p: build(r.p)?,
            q: build(r.q)?,
        })
    }
}

/// Square matrix over R.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix(pub Vec<Vec<RingScalar>>);

impl RingMatrix {
    pub fn identity(n: usize) -> Self {
        RingMatrix(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                RingScalar::one()
                            } else {
                                RingScalar::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn from_int_matrix(m: &[Vec<i64>]) -> Self {
        RingMatrix(
            m.iter()
                .map(|row| row.iter().map(|&x| RingScalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn conj(&self) -> Self {
        RingMatrix(
            self.0
                .iter()
                .map(|row| row.iter().map(RingScalar::conj).collect())
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &RingMatrix) -> RingMatrix {
        let n = self.size();
        RingMatrix(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut acc = RingScalar::zero();
                            for k in 0..n {
                                acc = &acc + &(&self.0[i][k] * &rhs.0[k][j]);
                            }
                            acc
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn scale(&self, a: &RingScalar) -> RingMatrix {
        RingMatrix(
            self.0
                .iter()
                .map(|row| row.iter().map(|x| x * a).collect())
                .collect(),
        )
    }

    pub fn add(&self, rhs: &RingMatrix) -> RingMatrix {
        RingMatrix(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a + b).collect())
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == RingMatrix::identity(self.size())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    /// Pivots are chosen by lowest combined degree for determinism.
    pub fn det(&self) -> RingScalar {
        let n = self.size();
        if n == 0 {
            return RingScalar::one();
        }
        let mut m = self.0.clone();
        let mut sign = 1i64;
        let mut prev = RingScalar::one();
        for k in 0..n - 1 {
            // lowest-degree nonzero pivot in the trailing block, row-major tie-break
            let mut pivot: Option<(usize, usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    let d = m[i][j].degree();
                    if pivot.map_or(true, |(pd, _, _)| d < pd) {
                        pivot = Some((d, i, j));
                    }
                }
            }
            let (_, pi, pj) = match pivot {
                Some(p) => p,
                None => return RingScalar::zero(),
            };
            if pi != k {
                m.swap(pi, k);
                sign = -sign;
            }
            if pj != k {
                for row in m.iter_mut() {
                    row.swap(pj, k);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = t
                        .exact_div(&prev)
                        .expect("Bareiss division must be exact over an integral domain");
                }
            }
            for i in k + 1..n {
                m[i][k] = RingScalar::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -&d
        } else {
            d
        }
    }

    /// Exact evaluation of every entry at the undeformed limit c = 1, k = 0.
    pub fn eval_limit(&self) -> Vec<Vec<GaussRat>> {
        self.0
            .iter()
            .map(|row| row.iter().map(RingScalar::eval_limit).collect())
            .collect()
    }

    pub fn eval(&self, eps: f64) -> Vec<Vec<Complex64>> {
        self.0
            .iter()
            .map(|row| row.iter().map(|x| x.eval(eps)).collect())
            .collect()
    }
}
