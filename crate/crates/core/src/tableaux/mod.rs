//! Partitions, words and tableaux in French convention, with their
//! statistics and the bijections used to count bases.

mod cocharge;
mod partition;
mod rsk;
mod tableau;

pub use cocharge::{
    cocharge, cocharge_labels, cocharge_tableau, tableau_cocharge, CochargeLabeling,
};
pub use partition::{factorial, multinomial, Partition};
pub use rsk::{lower_destandardized, raise_destandardized, rsk, rsk_inverse};
pub use tableau::{
    des, descent_stats, destandardize, last_letter_cmp, sort_last_letter, DescentStats, Flavor,
    Tableau, Word,
};

#[cfg(test)]
pub(crate) mod test_util {
    use super::Tableau;

    /// Compact notation with the top row first and single-digit entries,
    /// e.g. `"7/346/125"`.
    pub fn young(s: &str) -> Tableau {
        let rows = s
            .split('/')
            .rev()
            .map(|r| {
                r.chars()
                    .map(|c| c.to_digit(10).unwrap() as usize)
                    .collect()
            })
            .collect();
        Tableau::new(rows).unwrap()
    }
}
