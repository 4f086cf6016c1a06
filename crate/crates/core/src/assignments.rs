//! Exhaustive enumeration of functions `[0, len) -> R_k`.

/// Counter over `R_k^len` in lexicographic order, position 0 most significant.
#[derive(Clone, Debug)]
pub struct Odometer {
    modulus: u32,
    digits: Vec<u32>,
    started: bool,
    done: bool,
}

impl Odometer {
    pub fn new(modulus: u32, len: usize) -> Self {
        Odometer {
            modulus,
            digits: vec![0; len],
            started: false,
            // R_0 is empty, so there are no functions unless the domain is empty too.
            done: modulus == 0 && len > 0,
        }
    }

    /// Advances to the next assignment and returns it, or `None` when exhausted.
    /// The index of the most significant digit that changed is also returned,
    /// which lets callers update running sums incrementally.
    pub fn advance(&mut self) -> Option<(&[u32], usize)> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some((&self.digits, 0));
        }
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.modulus {
                return Some((&self.digits, i));
            }
            self.digits[i] = 0;
        }
        self.done = true;
        None
    }
}

/// Calls `f` on every assignment.
pub fn for_each(modulus: u32, len: usize, mut f: impl FnMut(&[u32])) {
    let mut odo = Odometer::new(modulus, len);
    while let Some((a, _)) = odo.advance() {
        f(a);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let mut n = 0;
        for_each(3, 4, |_| n += 1);
        assert_eq!(n, 81);
        let mut n = 0;
        for_each(5, 0, |a| {
            assert!(a.is_empty());
            n += 1
        });
        assert_eq!(n, 1);
        let mut n = 0;
        for_each(0, 2, |_| n += 1);
        assert_eq!(n, 0);
        let mut n = 0;
        for_each(0, 0, |_| n += 1);
        assert_eq!(n, 1);
    }

    #[test]
    fn order_is_lexicographic() {
        let mut seen = Vec::new();
        for_each(2, 2, |a| seen.push(a.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
