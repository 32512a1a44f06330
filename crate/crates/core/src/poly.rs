//! Univariate polynomials over the ground fields, with just enough
//! factorisation machinery to split endomorphisms and to certify that a
//! residue algebra is a field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{Field, Scalar};

/// Coefficients from the constant term upward; never has trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: Field) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x - c`
    pub fn linear(field: Field, c: &Scalar) -> Poly {
        Poly::new(field, vec![-c, field.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv();
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let inv = d.lead().unwrap().inv();
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j].sub_mul(&c, dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return Poly::one(self.field);
        }
        match self.field {
            Field::Rationals => {
                let g = self.gcd(&self.derivative());
                self.div_rem(&g).0.monic()
            }
            Field::Prime(p) => {
                let d = self.derivative();
                if d.is_zero() {
                    // f = g(x^p) = g(x)^p over F_p
                    let root: Vec<Scalar> = self.coeffs.iter().step_by(p as usize).cloned().collect();
                    return Poly::new(self.field, root).squarefree_part();
                }
                let g = self.gcd(&d);
                let mut part = self.div_rem(&g).0.monic();
                let rest = g.squarefree_part();
                // combine: product of distinct irreducibles of part and rest
                let common = part.gcd(&rest);
                let extra = rest.div_rem(&common).0;
                part = part.mul(&extra);
                part.monic()
            }
        }
    }

    /// Distinct rational roots of a polynomial over Q, or all roots in F_p.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        match self.field {
            Field::Prime(p) if p <= 4096 => self
                .field
                .elements()
                .unwrap()
                .into_iter()
                .filter(|x| self.eval(x).is_zero())
                .collect(),
            Field::Prime(_) => vec![],
            Field::Rationals => rational_roots(self),
        }
    }

    /// Irreducibility test. Over F_p this is exact; over Q it is exact up to
    /// degree 3 and otherwise relies on a reduction modulo a small prime,
    /// returning `None` when no prime settles the question.
    pub fn is_irreducible(&self) -> Option<bool> {
        let deg = self.degree()?;
        if deg == 0 {
            return Some(false);
        }
        if deg == 1 {
            return Some(true);
        }
        match self.field {
            Field::Prime(p) => Some(irreducible_mod_p(&self.monic(), p)),
            Field::Rationals => {
                if !rational_roots(self).is_empty() {
                    return Some(false);
                }
                if deg <= 3 {
                    return Some(true);
                }
                let ints = integer_coefficients(self);
                for &p in &[3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
                    let pb = BigInt::from(p);
                    if (ints.last().unwrap() % &pb).is_zero() {
                        continue;
                    }
                    let fp = Field::Prime(p);
                    let red = Poly::new(
                        fp,
                        ints.iter()
                            .map(|c| fp.from_i64(c.mod_floor(&pb).to_i64().unwrap()))
                            .collect(),
                    );
                    if red.gcd(&red.derivative()).degree() != Some(0) {
                        continue;
                    }
                    if irreducible_mod_p(&red.monic(), p) {
                        return Some(true);
                    }
                }
                None
            }
        }
    }

    /// Splits a squarefree polynomial over F_p into the products of its
    /// irreducible factors of each degree (distinct-degree factorisation).
    pub fn distinct_degree_parts(&self) -> Vec<Poly> {
        let Field::Prime(p) = self.field else {
            return vec![self.clone()];
        };
        let mut f = self.monic();
        let mut parts = Vec::new();
        let x = Poly::x(self.field);
        let mut h = x.clone();
        let mut i = 0;
        while f.degree().unwrap_or(0) >= 2 * (i + 1) {
            i += 1;
            h = h.pow_mod(p as u128, &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree().unwrap_or(0) > 0 {
                parts.push(g.clone());
                f = f.div_rem(&g).0.monic();
                h = h.rem(&f);
            }
        }
        if f.degree().unwrap_or(0) > 0 {
            parts.push(f);
        }
        parts
    }
}

fn irreducible_mod_p(f: &Poly, p: u32) -> bool {
    let deg = f.degree().unwrap();
    let x = Poly::x(f.field);
    let mut h = x.clone();
    for _ in 0..deg / 2 {
        h = h.pow_mod(p as u128, f);
        if f.gcd(&h.sub(&x)).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Scales a rational polynomial to a primitive integer polynomial.
fn integer_coefficients(f: &Poly) -> Vec<BigInt> {
    let qs: Vec<_> = f.coeffs.iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let mut l = BigInt::one();
    for q in &qs {
        l = l.lcm(q.denom());
    }
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * &l).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let m = n.to_u64()?;
    if m > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d != m / d {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    Some(out)
}

fn rational_roots(f: &Poly) -> Vec<Scalar> {
    let field = f.field;
    let mut ints = integer_coefficients(f);
    let mut roots = Vec::new();
    // strip factors of x
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(field.zero());
        ints.drain(..zeros);
    }
    if ints.len() <= 1 {
        return roots;
    }
    let (Some(ps), Some(qs)) = (small_divisors(&ints[0]), small_divisors(ints.last().unwrap())) else {
        return roots;
    };
    let g = Poly::new(
        field,
        ints.iter().map(|c| field.from_fraction(c, &BigInt::one()).unwrap()).collect(),
    );
    let mut seen = std::collections::BTreeSet::new();
    for pn in &ps {
        for qd in &qs {
            for sign in [1i32, -1] {
                let num = pn * BigInt::from(sign);
                let cand = field.from_fraction(&num, qd).unwrap();
                if seen.insert(cand.to_string()) && g.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// Minimal polynomial of `x` in an associative algebra, found by linear
/// dependence among successive powers.
pub fn minimal_polynomial<T>(
    field: Field,
    one: T,
    x: &T,
    mul: impl Fn(&T, &T) -> T,
    flatten: impl Fn(&T) -> Vec<Scalar>,
) -> Poly {
    use crate::matrix::{Matrix, RowSpace};
    let first = flatten(&one);
    let n = first.len();
    let mut space = RowSpace::new(n);
    space.insert(first.clone());
    let mut powers = vec![first];
    let mut cur = one;
    loop {
        cur = mul(&cur, x);
        let v = flatten(&cur);
        powers.push(v.clone());
        if space.insert(v) {
            continue;
        }
        // the first dependence involves the newest power with a nonzero coefficient
        let k = Matrix::from_columns(field, n, &powers).kernel();
        let col = k.column(0);
        let inv = col.last().unwrap().inv();
        return Poly::new(field, col.iter().map(|c| c * &inv).collect());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pq(c: &[i64]) -> Poly {
        let f = Field::Rationals;
        Poly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = pq(&[1, -2, 1]).mul(&pq(&[2, 1]));
        assert_eq!(f.squarefree_part(), pq(&[-1, 1]).mul(&pq(&[2, 1])).monic());
        assert_eq!(f.gcd(&pq(&[-1, 1])), pq(&[-1, 1]));
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 1)(x + 3)
        let f = pq(&[-1, 2]).mul(&pq(&[3, 1]));
        let mut r: Vec<String> = f.roots().iter().map(|s| s.to_string()).collect();
        r.sort();
        assert_eq!(r, vec!["-3", "1/2"]);
    }

    #[test]
    fn irreducibility() {
        assert_eq!(pq(&[1, 0, 1]).is_irreducible(), Some(true));
        assert_eq!(pq(&[-1, 0, 1]).is_irreducible(), Some(false));
        assert_eq!(pq(&[-2, 0, 0, 1]).is_irreducible(), Some(true));
        // x^4 + x + 1 is irreducible over Q (irreducible mod 2, but 2 is skipped; mod 3 it factors)
        let f2 = Field::Prime(2);
        let g = Poly::new(f2, vec![f2.one(), f2.one(), f2.zero(), f2.zero(), f2.one()]);
        assert_eq!(g.is_irreducible(), Some(true));
        let h = Poly::new(f2, vec![f2.one(), f2.zero(), f2.one()]);
        assert_eq!(h.is_irreducible(), Some(false));
    }

    #[test]
    fn squarefree_in_characteristic_p() {
        let f2 = Field::Prime(2);
        // (x^2 + x + 1)^2 = x^4 + x^2 + 1
        let f = Poly::new(f2, vec![f2.one(), f2.zero(), f2.one(), f2.zero(), f2.one()]);
        let s = f.squarefree_part();
        assert_eq!(s, Poly::new(f2, vec![f2.one(), f2.one(), f2.one()]));
    }

    #[test]
    fn distinct_degree() {
        let f2 = Field::Prime(2);
        // x (x+1) (x^2+x+1)
        let a = Poly::new(f2, vec![f2.zero(), f2.one()]);
        let b = Poly::new(f2, vec![f2.one(), f2.one()]);
        let c = Poly::new(f2, vec![f2.one(), f2.one(), f2.one()]);
        let f = a.mul(&b).mul(&c);
        let parts = f.distinct_degree_parts();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], a.mul(&b));
        assert_eq!(parts[1], c);
    }
}
