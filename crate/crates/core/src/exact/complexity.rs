/// Cost of the expansion for `faults` faults over `lines` candidate lines:
/// `2^m + lines·2^m`. `None` means the value does not fit in 64 bits.
pub fn estimate_complexity(faults: usize, lines: usize) -> Option<u64> {
    let base = 1u64.checked_shl(u32::try_from(faults).ok()?)?;
    (lines as u64).checked_mul(base)?.checked_add(base)
}

/// Worst case, every fault on its own row and column: `2^m (2m + 1)`.
pub fn worst_case_complexity(faults: usize) -> Option<u64> {
    estimate_complexity(faults, faults.checked_mul(2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(worst_case_complexity(10), Some(21504));
        assert_eq!(worst_case_complexity(0), Some(1));
        assert_eq!(estimate_complexity(10, 11), Some(12288));
    }

    #[test]
    fn overflow_saturates_to_none() {
        assert_eq!(estimate_complexity(64, 0), None);
        assert_eq!(worst_case_complexity(60), None);
        assert!(worst_case_complexity(40).is_some());
    }
}
