//! Counting the permutations the construction produces, three ways: direct
//! enumeration, the closed recurrence a(n) = 4a(n-1) - 2a(n-2) (OEIS
//! A006012, offset by three), and a branch-structure recurrence with base
//! value 1 at length two.

use crate::construction::enumerate_constructions;
use crate::error::{Error, Result};

/// Number of permutations found by the construction on `n`, by exhaustive
/// traversal. The base vector is not counted.
pub fn count_direct(n: usize) -> Result<u64> {
    Ok(enumerate_constructions(n)?.len() as u64)
}

/// A006012: a(0) = 1, a(1) = 2, a(k) = 4a(k-1) - 2a(k-2).
pub fn a006012(k: usize) -> Result<i64> {
    let (mut prev, mut cur) = (1i64, 2i64);
    if k == 0 {
        return Ok(1);
    }
    for _ in 1..k {
        let next = cur
            .checked_mul(4)
            .and_then(|x| x.checked_sub(prev.checked_mul(2)?))
            .ok_or(Error::Overflow)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RecurrenceRow {
    pub n: usize,
    /// Count from exhaustive enumeration.
    pub direct: i64,
    /// a006012(n - 3).
    pub closed_form: i64,
    /// N(n) = N(n-1) + sum over i of 3^i * N(n-2-i), indices kept at or
    /// above the base value N(2) = 1.
    pub recurrence: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceReport {
    pub rows: Vec<RecurrenceRow>,
}

/// Checks all three counts agree for every n in `3..=n_max`. Disagreement is
/// an error naming the first failing n.
pub fn recurrence_check(n_max: usize) -> Result<RecurrenceReport> {
    if n_max < 3 {
        return Err(Error::domain("recurrence check needs n_max >= 3"));
    }
    // counts[n] = N(n), with N(2) = 1 as the unique length-2 arrangement.
    let mut counts: Vec<i64> = vec![0, 0, 1];
    let mut rows = Vec::new();
    for n in 3..=n_max {
        let direct = count_direct(n)? as i64;
        counts.push(direct);
        let closed_form = a006012(n - 3)?;
        // Sum runs while the summand index n-2-i stays at or above 2.
        let mut recurrence = counts[n - 1];
        let mut power = 1i64;
        for i in 0..n.saturating_sub(3) {
            let idx = n - 2 - i;
            recurrence = recurrence
                .checked_add(power.checked_mul(counts[idx]).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
            power = power.checked_mul(3).ok_or(Error::Overflow)?;
        }
        let row = RecurrenceRow { n, direct, closed_form, recurrence };
        if direct != closed_form || direct != recurrence {
            return Err(Error::CountMismatch { n, direct, closed_form, recurrence });
        }
        rows.push(row);
    }
    Ok(RecurrenceReport { rows })
}
