//! One-row tableaux of types C and D and their counts.

use onerow::tableaux::{count_closed_form, enumerate, Alphabet, Family};

fn main() {
    for tab in enumerate(Alphabet::new(Family::D, 2), 2) {
        let word: Vec<String> = tab.word().iter().map(|l| l.to_string()).collect();
        println!("{:<12} weight {:?}", word.join(" "), tab.weight());
    }
    println!();
    for family in [Family::C, Family::D] {
        let counts: Vec<String> = (0..=6)
            .map(|r| {
                let got = enumerate(Alphabet::new(family, 3), r).len() as u64;
                assert_eq!(got, count_closed_form(family, 3, r));
                got.to_string()
            })
            .collect();
        println!("{family}_3, r = 0..6: {}", counts.join(", "));
    }
}
