use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{rat_from_int, ExactRat};

use super::{assoc_ctc, check_m_step, ctc, generalized_d, m_order_ctc, motzkin, trinomial_coeff};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Central trinomial coefficients `c_n`.
    Ctc,
    /// Motzkin numbers `m_n`.
    Motzkin,
    /// A fixed column `(n m)_2` of the trinomial triangle.
    TrinomialCol,
    /// p-associated coefficients `c_n^p`.
    AssocCtc,
    /// m-th order p-associated coefficients `_m c_n^p`.
    MOrderCtc,
    /// Central coefficients `_m d_n` of `(1 + x + x^m)^n`.
    GeneralizedD,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Ctc,
        Family::Motzkin,
        Family::TrinomialCol,
        Family::AssocCtc,
        Family::MOrderCtc,
        Family::GeneralizedD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ctc => "CTC",
            Family::Motzkin => "MOTZKIN",
            Family::TrinomialCol => "TRINOMIAL_COL",
            Family::AssocCtc => "ASSOC_CTC",
            Family::MOrderCtc => "M_ORDER_CTC",
            Family::GeneralizedD => "GENERALIZED_D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == wanted)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown sequence family `{s}`")))
    }
}

/// A validated sequence selection: a family plus the parameters it uses.
///
/// Parameters a family does not use must stay at their defaults
/// (`p = 0`, `m_step = 2`, `column = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeqSpec {
    family: Family,
    p: usize,
    m_step: usize,
    column: i64,
}

impl SeqSpec {
    pub fn new(family: Family, p: usize, m_step: usize, column: i64) -> Result<Self> {
        check_m_step(m_step)?;
        let uses_p = matches!(family, Family::AssocCtc | Family::MOrderCtc);
        let uses_m = matches!(family, Family::MOrderCtc | Family::GeneralizedD);
        if p != 0 && !uses_p {
            return Err(Error::InvalidParameter(format!("{family} does not take p")));
        }
        if m_step != 2 && !uses_m {
            return Err(Error::InvalidParameter(format!("{family} does not take m_step")));
        }
        if column != 0 && family != Family::TrinomialCol {
            return Err(Error::InvalidParameter(format!("{family} does not take a column")));
        }
        Ok(Self { family, p, m_step, column })
    }

    pub fn ctc() -> Self {
        Self { family: Family::Ctc, p: 0, m_step: 2, column: 0 }
    }

    pub fn motzkin() -> Self {
        Self { family: Family::Motzkin, ..Self::ctc() }
    }

    pub fn trinomial_col(column: i64) -> Self {
        Self { family: Family::TrinomialCol, column, ..Self::ctc() }
    }

    pub fn assoc(p: usize) -> Self {
        Self { family: Family::AssocCtc, p, ..Self::ctc() }
    }

    pub fn m_order(m_step: usize, p: usize) -> Result<Self> {
        Self::new(Family::MOrderCtc, p, m_step, 0)
    }

    pub fn generalized_d(m_step: usize) -> Result<Self> {
        Self::new(Family::GeneralizedD, 0, m_step, 0)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn m_step(&self) -> usize {
        self.m_step
    }

    pub fn column(&self) -> i64 {
        self.column
    }

    /// Whether every term is an integer.
    pub fn is_integer_valued(&self) -> bool {
        !matches!(self.family, Family::AssocCtc | Family::MOrderCtc) || self.p <= 1
    }

    /// Term `n` by direct summation.
    pub fn term(&self, n: usize) -> ExactRat {
        match self.family {
            Family::Ctc => rat_from_int(ctc(n)),
            Family::Motzkin => rat_from_int(motzkin(n)),
            Family::TrinomialCol => rat_from_int(trinomial_coeff(n, self.column)),
            Family::AssocCtc => assoc_ctc(n, self.p),
            Family::MOrderCtc => m_order_ctc(n, self.m_step, self.p).expect("m_step validated"),
            Family::GeneralizedD => rat_from_int(generalized_d(n, self.m_step).expect("m_step validated")),
        }
    }
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Ctc | Family::Motzkin => write!(f, "{}", self.family),
            Family::TrinomialCol => write!(f, "{}(column={})", self.family, self.column),
            Family::AssocCtc => write!(f, "{}(p={})", self.family, self.p),
            Family::MOrderCtc => write!(f, "{}(m={},p={})", self.family, self.m_step, self.p),
            Family::GeneralizedD => write!(f, "{}(m={})", self.family, self.m_step),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn parameter_applicability() {
        assert!(SeqSpec::new(Family::Ctc, 1, 2, 0).is_err());
        assert!(SeqSpec::new(Family::Motzkin, 0, 3, 0).is_err());
        assert!(SeqSpec::new(Family::AssocCtc, 0, 2, 1).is_err());
        assert!(SeqSpec::new(Family::MOrderCtc, 2, 1, 0).is_err());
        assert!(SeqSpec::new(Family::TrinomialCol, 0, 2, -3).is_ok());
        assert_eq!(SeqSpec::new(Family::AssocCtc, 2, 2, 0).unwrap(), SeqSpec::assoc(2));
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("motzkin".parse::<Family>().unwrap(), Family::Motzkin);
        assert!("fibonacci".parse::<Family>().is_err());
    }

    #[test]
    fn terms_and_integrality() {
        assert_eq!(SeqSpec::assoc(2).term(2), rat(5, 6));
        assert!(!SeqSpec::assoc(2).is_integer_valued());
        assert!(SeqSpec::m_order(3, 1).unwrap().is_integer_valued());
        assert_eq!(SeqSpec::trinomial_col(1).term(3), rat(6, 1));
    }
}
