//! Exact coefficient fields and the parameter data `(q, u_1..u_m)` the
//! algebras are built over.
//!
//! Two fields are supported: the rationals with arbitrary-precision
//! arithmetic, and prime fields `F_p`. Both are driven through the
//! [`Field`] trait so everything downstream stays exact and generic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Node;
use crate::error::Error;

pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + std::hash::Hash + Ord;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, Error>;
    fn parse(&self, s: &str) -> Result<Self::Elem, Error>;
    fn render(&self, a: &Self::Elem) -> String;
    /// `None` means characteristic zero.
    fn characteristic(&self) -> Option<u64>;
    fn describe(&self) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, Error> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut out = self.one();
        for _ in 0..e.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        Ok(out)
    }
}

/// The field of rational numbers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, Error> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn parse(&self, s: &str) -> Result<BigRational, Error> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator: {s:?}")));
                }
                Ok(BigRational::new(parse_int(num)?, den))
            }
            None => Ok(BigRational::from_integer(parse_int(s)?)),
        }
    }

    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn characteristic(&self) -> Option<u64> {
        None
    }

    fn describe(&self) -> String {
        "Q".to_string()
    }
}

/// The prime field `F_p`, elements stored reduced in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        let p = self.p as i128;
        (((n % p) + p) % p) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Result<u64, Error> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut t0, mut t1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce_i128(t0))
    }

    fn parse(&self, s: &str) -> Result<u64, Error> {
        let n: i128 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer: {s:?}")))?;
        Ok(self.reduce_i128(n))
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }

    fn describe(&self) -> String {
        format!("F_{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let powmod = |mut base: u64, mut exp: u64| -> u64 {
        let mut acc: u128 = 1;
        let m = n as u128;
        let mut b = base as u128 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            exp >>= 1;
        }
        base = acc as u64;
        base
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = powmod(x, 2);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The data an algebra is built over: a field, an invertible `q`, and the
/// cyclotomic parameters `u_1..u_m`, plus the rank `r`.
#[derive(Clone, Debug)]
pub struct ParameterSet<F: Field> {
    pub field: F,
    pub q: F::Elem,
    pub q_inv: F::Elem,
    pub u: Vec<F::Elem>,
    pub m: usize,
    pub r: usize,
}

impl<F: Field> ParameterSet<F> {
    pub fn new(field: F, q: F::Elem, u: Vec<F::Elem>, r: usize) -> Result<Self, Error> {
        if u.is_empty() {
            return Err(Error::Shape("need at least one cyclotomic parameter".into()));
        }
        if r == 0 {
            return Err(Error::Shape("rank must be at least 1".into()));
        }
        let q_inv = field
            .inv(&q)
            .map_err(|_| Error::Shape("q must be invertible".into()))?;
        let m = u.len();
        Ok(ParameterSet {
            field,
            q,
            q_inv,
            u,
            m,
            r,
        })
    }

    pub fn q_power(&self, k: i64) -> F::Elem {
        let base = if k < 0 { &self.q_inv } else { &self.q };
        let mut out = self.field.one();
        for _ in 0..k.unsigned_abs() {
            out = self.field.mul(&out, base);
        }
        out
    }

    /// `u_i`, 1-based.
    pub fn u(&self, i: usize) -> &F::Elem {
        &self.u[i - 1]
    }

    /// Minimal `l >= 2` with `1 + q + ... + q^{l-1} = 0`, or the field
    /// characteristic when `q = 1`; `None` means no such `l` (infinite).
    pub fn quantum_characteristic(&self) -> Option<u64> {
        let f = &self.field;
        if f.is_one(&self.q) {
            return f.characteristic();
        }
        match f.characteristic() {
            Some(p) => {
                let mut sum = f.one();
                let mut power = f.one();
                for l in 2..=p + 1 {
                    power = f.mul(&power, &self.q);
                    sum = f.add(&sum, &power);
                    if f.is_zero(&sum) {
                        return Some(l);
                    }
                }
                unreachable!("q generates a finite subgroup of F_p^*");
            }
            None => {
                if self.q == f.neg(&f.one()) {
                    Some(2)
                } else {
                    None
                }
            }
        }
    }

    /// The product over `i < j` and `1-r <= k <= r-1` of `u_i q^k - u_j`.
    /// Nonvanishing means the cyclotomic parameters stay separated along
    /// the whole tower of rank at most `r`.
    pub fn separation_product(&self) -> F::Elem {
        let f = &self.field;
        let mut out = f.one();
        for i in 1..=self.m {
            for j in i + 1..=self.m {
                for k in 1 - self.r as i64..=self.r as i64 - 1 {
                    let term = f.sub(&f.mul(self.u(i), &self.q_power(k)), self.u(j));
                    out = f.mul(&out, &term);
                }
            }
        }
        out
    }

    /// Separated parameters and quantum characteristic above the rank.
    pub fn is_semisimple(&self) -> bool {
        !self.field.is_zero(&self.separation_product())
            && self.quantum_characteristic().is_none_or(|l| l > self.r as u64)
    }

    pub fn describe(&self) -> String {
        let u: Vec<String> = self.u.iter().map(|x| self.field.render(x)).collect();
        format!(
            "{} with q = {}, u = ({}), r = {}",
            self.field.describe(),
            self.field.render(&self.q),
            u.join(", "),
            self.r
        )
    }
}

/// A well-separated point over the rationals: `q = 2` and widely spread
/// powers of 3 for the cyclotomic parameters.
pub fn generic_parameters(m: usize, r: usize) -> ParameterSet<Rationals> {
    let f = Rationals;
    let three = f.from_i64(3);
    let u: Vec<BigRational> = (0..m)
        .map(|i| f.pow(&three, (i * (2 * r + 1)) as i64).unwrap())
        .collect();
    let q = f.from_i64(2);
    ParameterSet::new(f, q, u, r).unwrap()
}

/// Serializable choice of coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

/// On-disk parameter description; element values are strings so one file
/// format serves every field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsFile {
    pub field: FieldSpec,
    pub q: String,
    pub u: Vec<String>,
    pub m: usize,
    pub r: usize,
}

/// A parameter set over whichever field a file asked for.
#[derive(Clone, Debug)]
pub enum RealizedParams {
    Rationals(ParameterSet<Rationals>),
    Prime(ParameterSet<PrimeField>),
}

impl ParamsFile {
    pub fn realize(&self) -> Result<RealizedParams, Error> {
        if self.m != self.u.len() {
            return Err(Error::Shape(format!(
                "m = {} but {} cyclotomic parameters were given",
                self.m,
                self.u.len()
            )));
        }
        match &self.field {
            FieldSpec::Rationals => {
                let f = Rationals;
                let q = f.parse(&self.q)?;
                let u = self
                    .u
                    .iter()
                    .map(|s| f.parse(s))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RealizedParams::Rationals(ParameterSet::new(f, q, u, self.r)?))
            }
            FieldSpec::Prime { p } => {
                let f = PrimeField::new(*p)?;
                let q = f.parse(&self.q)?;
                let u = self
                    .u
                    .iter()
                    .map(|s| f.parse(s))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RealizedParams::Prime(ParameterSet::new(f, q, u, self.r)?))
            }
        }
    }

    pub fn from_parameter_set_rational(params: &ParameterSet<Rationals>) -> Self {
        let f = &params.field;
        ParamsFile {
            field: FieldSpec::Rationals,
            q: f.render(&params.q),
            u: params.u.iter().map(|x| f.render(x)).collect(),
            m: params.m,
            r: params.r,
        }
    }
}

/// Residue of a box: the component together with the diagonal offset
/// `col - row`, reduced mod the quantum characteristic when it is finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    pub component: usize,
    pub offset: i64,
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.component, self.offset)
    }
}

pub fn residue(node: &Node, l: Option<u64>) -> Residue {
    let raw = node.col as i64 - node.row as i64;
    let offset = match l {
        Some(l) => {
            let l = l as i64;
            ((raw % l) + l) % l
        }
        None => raw,
    };
    Residue {
        component: node.component,
        offset,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let f = Rationals;
        let a = f.parse("2/3").unwrap();
        let b = f.parse("-1/6").unwrap();
        assert_eq!(f.render(&f.add(&a, &b)), "1/2");
        assert_eq!(f.render(&f.mul(&a, &b)), "-1/9");
        assert_eq!(f.render(&f.inv(&a).unwrap()), "3/2");
        assert_eq!(f.render(&f.from_i64(-7)), "-7");
        assert!(f.inv(&f.zero()).is_err());
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("x").is_err());
        assert_eq!(f.parse("4/6").unwrap(), a);
        assert_eq!(f.render(&f.pow(&f.from_i64(2), -3).unwrap()), "1/8");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert_eq!(f.add(&3, &4), 2);
        assert_eq!(f.mul(&3, &4), 2);
        for a in 1..5u64 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert!(f.inv(&0).is_err());
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
        let big = PrimeField::new(1_000_000_007).unwrap();
        assert_eq!(big.mul(&999_999_999, &999_999_998), {
            let m = 1_000_000_007u128;
            ((999_999_999u128 * 999_999_998u128) % m) as u64
        });
    }

    #[test]
    fn primality() {
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
        assert!(is_prime(2));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    fn prime_params(p: u64, q: i64, u: &[i64], r: usize) -> ParameterSet<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        let q = f.from_i64(q);
        let u = u.iter().map(|&x| f.from_i64(x)).collect();
        ParameterSet::new(f, q, u, r).unwrap()
    }

    #[test]
    fn quantum_characteristic_values() {
        let f = Rationals;
        let mk = |q: i64| {
            ParameterSet::new(f.clone(), f.from_i64(q), vec![f.one()], 3).unwrap()
        };
        assert_eq!(mk(2).quantum_characteristic(), None);
        assert_eq!(mk(1).quantum_characteristic(), None);
        assert_eq!(mk(-1).quantum_characteristic(), Some(2));

        assert_eq!(prime_params(5, 4, &[1], 3).quantum_characteristic(), Some(2));
        assert_eq!(prime_params(5, 1, &[1], 3).quantum_characteristic(), Some(5));
        assert_eq!(prime_params(5, 2, &[1], 3).quantum_characteristic(), Some(4));
        assert_eq!(prime_params(7, 2, &[1], 3).quantum_characteristic(), Some(3));
    }

    #[test]
    fn separation_product_fixture_values() {
        let p = prime_params(5, 4, &[1, 2], 3);
        assert_eq!(p.separation_product(), 1);
        let p2 = prime_params(5, 4, &[1, 2], 2);
        assert_eq!(p2.separation_product(), 1);
        // three parameters in F_5 with q = 4 cannot stay separated
        let p3 = prime_params(5, 4, &[1, 2, 3], 2);
        assert_eq!(p3.separation_product(), 0);
    }

    #[test]
    fn semisimplicity_regimes() {
        assert!(!prime_params(5, 4, &[1, 2], 3).is_semisimple()); // l = 2 <= 3
        assert!(prime_params(5, 4, &[1], 1).is_semisimple());
        assert!(generic_parameters(2, 3).is_semisimple());
        assert!(generic_parameters(3, 4).is_semisimple());
        let f = Rationals;
        let clash = ParameterSet::new(f.clone(), f.from_i64(2), vec![f.one(), f.one()], 2)
            .unwrap();
        assert!(!clash.is_semisimple());
    }

    #[test]
    fn generic_point_is_separated() {
        for m in 1..=3 {
            for r in 1..=4 {
                let p = generic_parameters(m, r);
                assert!(!p.field.is_zero(&p.separation_product()), "m={m} r={r}");
            }
        }
        let p = generic_parameters(2, 3);
        assert_eq!(p.field.render(&p.u[1]), "2187");
    }

    #[test]
    fn params_file_round_trip() {
        let file = ParamsFile {
            field: FieldSpec::Prime { p: 5 },
            q: "4".into(),
            u: vec!["1".into(), "2".into()],
            m: 2,
            r: 3,
        };
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.contains("\"kind\":\"prime\""));
        let back: ParamsFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        match back.realize().unwrap() {
            RealizedParams::Prime(p) => {
                assert_eq!(p.q, 4);
                assert_eq!(p.u, vec![1, 2]);
                assert_eq!(p.r, 3);
            }
            _ => panic!("wrong field"),
        }

        let bad = ParamsFile {
            m: 1,
            ..file.clone()
        };
        assert!(bad.realize().is_err());

        let rat = ParamsFile::from_parameter_set_rational(&generic_parameters(2, 2));
        match rat.realize().unwrap() {
            RealizedParams::Rationals(p) => assert_eq!(p.field.render(&p.u[1]), "243"),
            _ => panic!("wrong field"),
        }
    }

    #[test]
    fn residue_examples() {
        let n = Node::new(1, 2, 1);
        assert_eq!(residue(&n, Some(2)), Residue { component: 1, offset: 1 });
        assert_eq!(residue(&n, None), Residue { component: 1, offset: -1 });
        let d = Node::new(2, 3, 3);
        assert_eq!(residue(&d, Some(4)).offset, 0);
        assert_eq!(residue(&Node::new(1, 1, 4), Some(3)).offset, 0);
    }

    #[test]
    fn q_power_uses_inverse_for_negative_exponents() {
        let p = prime_params(5, 2, &[1], 2);
        assert_eq!(p.q_power(-1), 3); // 2 * 3 = 6 = 1 mod 5
        assert_eq!(p.q_power(0), 1);
        assert_eq!(p.q_power(3), 3);
        let g = generic_parameters(1, 2);
        assert_eq!(g.field.render(&g.q_power(-2)), "1/4");
    }
}
