use std::fmt;


use super::laurent::{UPoly, YLaurent};
use super::ring::{Rational, Ring};

/// Quotient of two Laurent polynomials in `u = y^{1/2}`.
///
/// Kept reduced: the common polynomial factor is cancelled, the denominator
/// is a monic polynomial in `u` with nonzero constant term.
#[derive(Clone)]
pub struct YRationalFn {
    num: YLaurent,
    den: YLaurent,
}

impl YRationalFn {
    /// Panics if `den` is zero.
    pub fn new(num: YLaurent, den: YLaurent) -> Self {
        assert!(!den.vanishes(), "zero denominator");
        Self::reduce(num, den)
    }

    pub fn from_laurent(num: YLaurent) -> Self {
        Self {
            num,
            den: YLaurent::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_laurent(YLaurent::constant(c))
    }

    pub fn numerator(&self) -> &YLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &YLaurent {
        &self.den
    }

    /// The Laurent polynomial this function equals, if the denominator is a
    /// unit (a monomial).
    pub fn to_laurent(&self) -> Option<YLaurent> {
        let inv = self.den.try_inverse()?;
        Some(self.num.times(&inv))
    }

    pub fn eval(&self, u: &Rational) -> Option<Rational> {
        let d = self.den.eval(u);
        (!d.vanishes()).then(|| self.num.eval(u) / d)
    }

    fn reduce(num: YLaurent, den: YLaurent) -> Self {
        if num.vanishes() {
            return Self::from_laurent(YLaurent::zero());
        }
        let (sn, pn) = num.to_upoly().expect("nonzero");
        let (sd, pd) = den.to_upoly().expect("nonzero");
        let g = pn.gcd(&pd);
        let (mut pn, _) = pn.div_rem(&g);
        let (pd, _) = pd.div_rem(&g);
        let lead = pd.coeffs.last().cloned().expect("nonzero").recip();
        let pd = UPoly::new(pd.coeffs.iter().map(|c| c * &lead).collect());
        pn = UPoly::new(pn.coeffs.iter().map(|c| c * &lead).collect());
        Self {
            num: YLaurent::from_upoly(sn - sd, &pn),
            den: YLaurent::from_upoly(0, &pd),
        }
    }
}

impl PartialEq for YRationalFn {
    /// Cross-multiplication equality.
    fn eq(&self, other: &Self) -> bool {
        self.num.times(&other.den) == other.num.times(&self.den)
    }
}

impl Ring for YRationalFn {
    fn zero_like(&self) -> Self {
        Self::from_laurent(YLaurent::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_laurent(YLaurent::one())
    }
    fn vanishes(&self) -> bool {
        self.num.vanishes()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(self.num.plus(&other.num), self.den.clone());
        }
        Self::reduce(
            self.num.times(&other.den).plus(&other.num.times(&self.den)),
            self.den.times(&other.den),
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        if self.den.is_unity() && other.den.is_unity() {
            return Self::from_laurent(self.num.times(&other.num));
        }
        Self::reduce(self.num.times(&other.num), self.den.times(&other.den))
    }
    fn negate(&self) -> Self {
        Self {
            num: self.num.negate(),
            den: self.den.clone(),
        }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.vanishes() {
            return self.zero_like();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.num.vanishes() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }
    fn is_unity(&self) -> bool {
        self.num == self.den
    }
}

impl fmt::Debug for YRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for YRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == YLaurent::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<YLaurent> for YRationalFn {
    fn from(l: YLaurent) -> Self {
        Self::from_laurent(l)
    }
}

impl From<Rational> for YRationalFn {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}
