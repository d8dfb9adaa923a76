use rand::seq::SliceRandom;
use rand::Rng;

use super::expand_config;
use crate::error::{Error, Result};
use crate::lie::{config_bracketing, uea_expand, LieElement, Tree};
use crate::words::{Alphabet, Letter, MultiDegree, Word, WordFilter, WordSet};

/// A surjection of ordered alphabets `V → W` that is weakly order
/// preserving and sends only the first letter of `V` to the first letter of
/// `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetMap {
    source: Alphabet,
    target: Alphabet,
    image: Vec<Letter>,
}

impl AlphabetMap {
    pub fn new(source: &Alphabet, target: &Alphabet, image: Vec<Letter>) -> Result<Self> {
        let bad = |m: String| Err(Error::AlphabetMap(m));
        if image.len() != source.len() {
            return bad(format!("{} images for {} letters", image.len(), source.len()));
        }
        if let Some(l) = image.iter().find(|l| !target.contains(**l)) {
            return bad(format!("image index {} outside the target", l.0));
        }
        if image.windows(2).any(|p| p[0] > p[1]) {
            return bad("not order preserving".into());
        }
        if target.letters().any(|l| !image.contains(&l)) {
            return bad("not surjective".into());
        }
        if image.iter().filter(|&&l| l == Letter(0)).count() != 1 {
            return bad("the first target letter must have exactly one preimage".into());
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            image,
        })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Self {
            source: alphabet.clone(),
            target: alphabet.clone(),
            image: alphabet.letters().collect(),
        }
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn apply(&self, l: Letter) -> Letter {
        self.image[l.index()]
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        w.map_letters(|l| self.apply(l))
    }

    pub fn apply_tree(&self, t: &Tree) -> Tree {
        t.relabel(&|l| self.apply(l))
    }
}

/// The letterwise image of `w ∈ 𝓑̂` under `phi` when it again lies in 𝓑̂,
/// otherwise `None` (the zero element).
pub fn quotient_check(phi: &AlphabetMap, w: &Word) -> Result<Option<Word>> {
    WordSet::Bhat.check(w)?;
    let u = phi.apply_word(w);
    Ok(WordSet::Bhat.contains(&u).then_some(u))
}

/// The quotient property evaluated on one word.
#[derive(Debug, Clone)]
pub struct QuotientCase {
    pub word: Word,
    pub image: Option<Word>,
    /// `𝓛w` with its leaves relabeled by `phi`.
    pub relabeled: Tree,
    /// Relabeled tree equals `𝓛` of the image, or is zero in the free Lie
    /// algebra when the image is not in 𝓑̂.
    pub holds: bool,
    /// The relabeled tree and `𝓛` of the image agree as trees, not only as
    /// Lie elements.
    pub identical: bool,
}

pub fn quotient_case(phi: &AlphabetMap, w: &Word) -> Result<QuotientCase> {
    let image = quotient_check(phi, w)?;
    let relabeled = phi.apply_tree(&config_bracketing(w, WordSet::Bhat)?);
    let (holds, identical) = match &image {
        Some(u) => {
            let lu = config_bracketing(u, WordSet::Bhat)?;
            let same =
                uea_expand(&LieElement::from_tree(lu.clone())) == uea_expand(&LieElement::from_tree(relabeled.clone()));
            (same, lu == relabeled)
        }
        None => {
            let e = LieElement::from_tree(relabeled.clone());
            (expand_config(&e, WordSet::Bhat, phi.target()).is_empty(), false)
        }
    };
    Ok(QuotientCase {
        word: w.clone(),
        image,
        relabeled,
        holds,
        identical,
    })
}

/// A random admissible map and a random `ω̂ ∈ 𝓑̂` of length at most `max_n`
/// over a source alphabet of 2 to `max_letters` letters.
pub fn random_quotient_case<R: Rng + ?Sized>(rng: &mut R, max_letters: usize, max_n: usize) -> (AlphabetMap, Word) {
    assert!(max_letters >= 2 && max_n >= 2);
    loop {
        let d = rng.gen_range(2..=max_letters);
        let m = rng.gen_range(2..=d);
        // Letter 0 alone goes to the first target letter; the other d − 1
        // letters are cut into m − 1 nonempty consecutive runs.
        let mut cuts: Vec<usize> = (2..d).collect();
        cuts.shuffle(rng);
        cuts.truncate(m - 2);
        cuts.sort_unstable();
        let mut image = vec![Letter(0)];
        let mut run = 1u16;
        for v in 1..d {
            if cuts.contains(&v) {
                run += 1;
            }
            image.push(Letter(run));
        }
        let source = Alphabet::numeric(d);
        let target = Alphabet::numeric(m);
        let phi = AlphabetMap::new(&source, &target, image).expect("construction is admissible");

        let n = rng.gen_range(2..=max_n);
        let mut counts = vec![0; d];
        for _ in 0..n {
            counts[rng.gen_range(0..d)] += 1;
        }
        let md = MultiDegree::new(counts).expect("n ≥ 2");
        let words = WordSet::Bhat.words(&source, &WordFilter::MultiDegree(md));
        if let Some(w) = words.choose(rng) {
            return (phi, w.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn l(i: u16) -> Letter {
        Letter(i)
    }

    #[test]
    fn map_preconditions() {
        let v = Alphabet::numeric(3);
        let w = Alphabet::numeric(2);
        assert!(AlphabetMap::new(&v, &w, vec![l(0), l(1), l(1)]).is_ok());
        assert!(AlphabetMap::new(&v, &w, vec![l(0), l(0), l(1)]).is_err());
        assert!(AlphabetMap::new(&v, &w, vec![l(1), l(0), l(1)]).is_err());
        assert!(AlphabetMap::new(&v, &Alphabet::numeric(3), vec![l(0), l(1), l(1)]).is_err());
        assert!(AlphabetMap::new(&v, &w, vec![l(0), l(1)]).is_err());
        assert!(AlphabetMap::new(&v, &w, vec![l(0), l(1), l(2)]).is_err());
    }

    #[test]
    fn identity_map() {
        let a = Alphabet::parse("x,y,z").unwrap();
        let phi = AlphabetMap::identity(&a);
        let w = a.parse_word("xzxyyz").unwrap();
        assert_eq!(quotient_check(&phi, &w).unwrap(), Some(w.clone()));
        assert!(quotient_case(&phi, &w).unwrap().identical);
        assert!(quotient_check(&phi, &a.parse_word("xyyzxz").unwrap()).is_err());
    }

    #[test]
    fn collapsing_to_two_letters() {
        let a = Alphabet::parse("x,y,z").unwrap();
        let b = Alphabet::parse("p,q").unwrap();
        let phi = AlphabetMap::new(&a, &b, vec![l(0), l(1), l(1)]).unwrap();
        let c = quotient_case(&phi, &a.parse_word("xzxyyz").unwrap()).unwrap();
        assert_eq!(c.image, Some(b.parse_word("pqpqqq").unwrap()));
        assert!(c.holds);
        let c = quotient_case(&phi, &a.parse_word("xxyzyz").unwrap()).unwrap();
        assert_eq!(c.image, Some(b.parse_word("ppqqqq").unwrap()));
        assert!(c.holds && c.identical);
    }

    #[test]
    fn known_failures_of_the_quotient_property() {
        // Exhaustive search over four-letter words of length at most 6 turns
        // up a handful of words where the property does not hold. Two of
        // them are kept here so a change in behavior is noticed.
        let v = Alphabet::parse("a,b,c,d").unwrap();
        let w = Alphabet::parse("p,q,r").unwrap();
        let phi = AlphabetMap::new(&v, &w, vec![l(0), l(1), l(2), l(2)]).unwrap();
        let c = quotient_case(&phi, &v.parse_word("acdadb").unwrap()).unwrap();
        assert_eq!(c.image, None);
        assert!(!c.holds);
        let phi = AlphabetMap::new(&v, &w, vec![l(0), l(1), l(1), l(2)]).unwrap();
        let c = quotient_case(&phi, &v.parse_word("abacad").unwrap()).unwrap();
        assert_eq!(c.image, Some(w.parse_word("pqpqpr").unwrap()));
        assert!(!c.holds);
    }

    #[test]
    fn random_cases_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let (phi, w) = random_quotient_case(&mut rng, 4, 6);
            assert!(w.len() <= 6);
            assert!(quotient_check(&phi, &w).is_ok());
        }
    }
}
