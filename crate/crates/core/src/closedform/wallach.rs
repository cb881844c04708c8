use crate::rootdata::{LieType, ParabolicChoice};
use crate::scalar::Scalar;

fn ordinal(k: i64) -> String {
    let suffix = match (k % 10, k % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{k}{suffix}")
}

/// Names the Wallach representation `L(z ξ_p)` is, when it is one.
pub fn wallach_annotation<S: Scalar>(choice: &ParabolicChoice, z: &S) -> Option<String> {
    let n = choice.n() as i64;
    let p = choice.p() as i64;
    let int = z.to_int();
    let twice = (z.clone() + z.clone()).to_int();
    match choice.lie_type() {
        LieType::A => {
            let k = -int?;
            let r = p.min(n - p);
            (1..=r - 1)
                .contains(&k)
                .then(|| format!("{} Wallach rep of SU({},{})", ordinal(k), p, n - p))
        }
        // z = -(n - 3/2)
        LieType::B => {
            (p == 1 && twice? == 3 - 2 * n).then(|| format!("Wallach rep of SO(2,{})", 2 * n - 1))
        }
        // z = -k/2
        LieType::C => {
            let k = -twice?;
            (p == n && (1..=n - 1).contains(&k))
                .then(|| format!("{} Wallach rep of Sp({},R)", ordinal(k), n))
        }
        LieType::D => {
            let z = int?;
            if p == 1 && z == 2 - n {
                return Some(format!("Wallach rep of SO(2,{})", 2 * n - 2));
            }
            if p == n && z < 0 && z % 2 == 0 && -z / 2 <= n / 2 - 1 {
                return Some(format!("{} Wallach rep of SO*({})", ordinal(-z / 2), 2 * n));
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn label(t: LieType, n: usize, p: usize, num: i64, den: i64) -> Option<String> {
        wallach_annotation(
            &ParabolicChoice::of(t, n, p).unwrap(),
            &Rational::from_frac(num, den),
        )
    }

    #[test]
    fn annotation_examples() {
        assert_eq!(
            label(LieType::A, 6, 3, -2, 1).as_deref(),
            Some("2nd Wallach rep of SU(3,3)")
        );
        assert_eq!(
            label(LieType::C, 5, 5, -3, 2).as_deref(),
            Some("3rd Wallach rep of Sp(5,R)")
        );
        assert_eq!(label(LieType::B, 4, 2, -1, 1), None);
    }

    #[test]
    fn annotation_ranges() {
        assert_eq!(label(LieType::A, 6, 3, -3, 1), None);
        assert_eq!(label(LieType::A, 6, 3, 0, 1), None);
        assert_eq!(
            label(LieType::B, 5, 1, -7, 2).as_deref(),
            Some("Wallach rep of SO(2,9)")
        );
        assert_eq!(label(LieType::B, 5, 2, -7, 2), None);
        assert_eq!(label(LieType::C, 5, 5, -5, 2), None);
        assert_eq!(label(LieType::C, 5, 4, -1, 2), None);
        assert_eq!(
            label(LieType::D, 6, 1, -4, 1).as_deref(),
            Some("Wallach rep of SO(2,10)")
        );
        assert_eq!(
            label(LieType::D, 6, 6, -4, 1).as_deref(),
            Some("2nd Wallach rep of SO*(12)")
        );
        assert_eq!(label(LieType::D, 6, 6, -6, 1), None);
        assert_eq!(label(LieType::D, 6, 6, -3, 1), None);
        assert_eq!(ordinal(11), "11th");
        assert_eq!(ordinal(21), "21st");
    }
}
