//! Exact rationals. Every printed rational uses the `num/den` form, integers
//! included.

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

pub fn int(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// `num/den` in lowest terms, e.g. `3/1`, `-1/4`.
pub fn display(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `a/b` or a bare integer.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((a, b)) => {
            let num: i64 = a.trim().parse().ok()?;
            let den: i64 = b.trim().parse().ok()?;
            (den != 0).then(|| Rational::new(num, den))
        }
        None => text.parse::<i64>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_always_has_denominator() {
        assert_eq!(display(&int(3)), "3/1");
        assert_eq!(display(&frac(6, 4)), "3/2");
        assert_eq!(display(&frac(1, -4)), "-1/4");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("1/2"), Some(frac(1, 2)));
        assert_eq!(parse(" 4 "), Some(int(4)));
        assert_eq!(parse("2/4"), Some(frac(1, 2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
