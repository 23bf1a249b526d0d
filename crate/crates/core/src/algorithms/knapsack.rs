use super::SolverError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Item {
    pub weight: u64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnapsackResult {
    pub best_value: f64,
    /// 0-based indices into the item slice, ascending.
    pub chosen: Vec<usize>,
}

/// 0/1 knapsack by dynamic programming over capacities `0..=capacity`.
///
/// Keeps the full `items x capacity` table so the chosen set can be read back.
/// When skipping an item is as good as taking it, the item is skipped.
pub fn knapsack_01(items: &[Item], capacity: u64) -> Result<KnapsackResult, SolverError> {
    if let Some(bad) = items.iter().find(|i| !i.value.is_finite() || i.value < 0.0) {
        return Err(SolverError::InvalidValue(bad.value));
    }
    let cap = capacity as usize;
    let width = cap + 1;
    // best[i][c]: optimum using the first i items within capacity c.
    let mut best = vec![0.0f64; (items.len() + 1) * width];
    for (i, item) in items.iter().enumerate() {
        let (prev, cur) = best.split_at_mut((i + 1) * width);
        let prev = &prev[i * width..];
        let cur = &mut cur[..width];
        for c in 0..width {
            cur[c] = prev[c];
            if item.weight <= c as u64 {
                let take = prev[c - item.weight as usize] + item.value;
                if take > cur[c] {
                    cur[c] = take;
                }
            }
        }
    }

    let mut chosen = Vec::new();
    let mut c = cap;
    for i in (0..items.len()).rev() {
        if best[(i + 1) * width + c] != best[i * width + c] {
            chosen.push(i);
            c -= items[i].weight as usize;
        }
    }
    chosen.reverse();
    Ok(KnapsackResult {
        best_value: best[items.len() * width + cap],
        chosen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn items(spec: &[(u64, f64)]) -> Vec<Item> {
        spec.iter()
            .map(|&(weight, value)| Item { weight, value })
            .collect()
    }

    #[test]
    fn zero_capacity() {
        let r = knapsack_01(&items(&[(1, 5.0), (2, 3.0)]), 0).unwrap();
        assert_eq!(r.best_value, 0.0);
        assert!(r.chosen.is_empty());
    }

    #[test]
    fn three_items_capacity_five() {
        let r = knapsack_01(&items(&[(2, 3.0), (3, 4.0), (4, 5.0)]), 5).unwrap();
        assert_eq!(r.best_value, 7.0);
        assert_eq!(r.chosen, vec![0, 1]);
    }

    #[test]
    fn zero_weight_items_are_free() {
        let r = knapsack_01(&items(&[(0, 2.0), (5, 1.0)]), 1).unwrap();
        assert_eq!(r.best_value, 2.0);
        assert_eq!(r.chosen, vec![0]);
    }

    #[test]
    fn no_items() {
        let r = knapsack_01(&[], 10).unwrap();
        assert_eq!(r.best_value, 0.0);
        assert!(r.chosen.is_empty());
    }

    #[test]
    fn negative_value_rejected() {
        assert_eq!(
            knapsack_01(&items(&[(1, -1.0)]), 3),
            Err(SolverError::InvalidValue(-1.0))
        );
    }
}
