//! Serde adapters that write big integers and rationals as decimal strings,
//! so JSON consumers never see limb arrays.

/// `BigUint` as a decimal string.
pub mod biguint {
    use alloc::string::{String, ToString};
    use core::str::FromStr;

    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    /// Serializes as a decimal string.
    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    /// Parses a decimal string.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::from_str(&s).map_err(D::Error::custom)
    }
}

/// `BigRational` as `"numerator/denominator"`.
pub mod big_rational {
    use alloc::format;
    use alloc::string::String;
    use core::str::FromStr;

    use num_rational::BigRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    /// Serializes as `"p/q"` in lowest terms.
    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", v.numer(), v.denom()))
    }

    /// Parses `"p/q"` or a bare integer.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        BigRational::from_str(&s).map_err(D::Error::custom)
    }
}
