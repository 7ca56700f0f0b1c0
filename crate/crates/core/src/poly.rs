//! Homogeneous forms in `x, y, z` over the rationals, stored densely in a
//! fixed graded-lexicographic monomial order.

use std::ops::Mul;

use num_traits::{One, Zero};

use crate::mesh::{LinearForm, Rational};

/// `C(n, 2)` extended by zero to `n < 2`.
pub fn choose2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Number of monomials of degree `d` in three variables, `C(d+2, 2)`.
pub fn monomial_count(d: usize) -> usize {
    (d + 2) * (d + 1) / 2
}

/// Degree-`d` monomials `x^i y^j z^l` in graded-lex order: descending `i`,
/// then descending `j`. The first monomial is `x^d`, the last `z^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    degree: usize,
}

impl MonomialBasis {
    pub fn new(degree: usize) -> Self {
        Self { degree }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        monomial_count(self.degree)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of `x^i y^j z^(d-i-j)`.
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        let d = self.degree;
        debug_assert!(i + j <= d);
        (d - i) * (d - i + 1) / 2 + (d - i - j)
    }

    pub fn exponents(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        let d = self.degree;
        (0..=d).rev().flat_map(move |i| (0..=d - i).rev().map(move |j| [i, j, d - i - j]))
    }
}

/// A homogeneous polynomial of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl HomogeneousForm {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: vec![Rational::zero(); monomial_count(degree)] }
    }

    pub fn one() -> Self {
        Self { degree: 0, coeffs: vec![Rational::one()] }
    }

    pub fn from_linear(form: &LinearForm) -> Self {
        // Degree-one order is x, y, z.
        Self { degree: 1, coeffs: vec![form.a.clone(), form.b.clone(), form.c.clone()] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> MonomialBasis {
        MonomialBasis::new(self.degree)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[self.basis().index_of(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms as `(exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], &Rational)> {
        MonomialBasis::new(self.degree)
            .exponents()
            .collect::<Vec<_>>()
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
    }
}

impl Mul for &HomogeneousForm {
    type Output = HomogeneousForm;

    fn mul(self, rhs: &HomogeneousForm) -> HomogeneousForm {
        let mut out = HomogeneousForm::zero(self.degree + rhs.degree);
        let basis = out.basis();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let idx = basis.index_of(ea[0] + eb[0], ea[1] + eb[1]);
                out.coeffs[idx] += ca * cb;
            }
        }
        out
    }
}

/// `f^e` by repeated squaring.
pub fn power(form: &LinearForm, exponent: usize) -> HomogeneousForm {
    let mut result = HomogeneousForm::one();
    let mut base = HomogeneousForm::from_linear(form);
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    result
}
