use std::str::FromStr;

/// Inclusive range `A..B` or `A..B..step`; a single number is a one-element range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub step: usize,
}

impl Span {
    pub fn single(x: usize) -> Self {
        Span { start: x, end: x, step: 1 }
    }

    pub fn values(&self) -> Vec<usize> {
        (self.start..=self.end).step_by(self.step).collect()
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid number {t:?} in range {s:?}"));
        let parts: Vec<&str> = s.split("..").collect();
        let span = match parts.as_slice() {
            [x] => Span::single(num(x)?),
            [a, b] => Span { start: num(a)?, end: num(b)?, step: 1 },
            [a, b, c] => Span { start: num(a)?, end: num(b)?, step: num(c)? },
            _ => return Err(format!("expected A..B or A..B..step, got {s:?}")),
        };
        if span.step == 0 {
            return Err(format!("range {s:?} has step 0"));
        }
        if span.start > span.end {
            return Err(format!("range {s:?} is empty"));
        }
        Ok(span)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("40..44..4".parse::<Span>().unwrap().values(), vec![40, 44]);
        assert_eq!("5..7".parse::<Span>().unwrap().values(), vec![5, 6, 7]);
        assert_eq!("3".parse::<Span>().unwrap().values(), vec![3]);
        assert!("7..5".parse::<Span>().is_err());
        assert!("1..5..0".parse::<Span>().is_err());
        assert!("a..b".parse::<Span>().is_err());
    }
}
