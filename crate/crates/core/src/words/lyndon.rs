use super::{Alphabet, Letter, Word, WordFilter};

/// True iff `w` is strictly smaller than each of its nontrivial rotations.
///
/// Runs Duval's factorization loop: `w` is Lyndon exactly when the first
/// Lyndon factor covers the whole word.
pub fn is_lyndon(w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    let (mut j, mut k) = (1, 0);
    while j < n && w[k] <= w[j] {
        if w[k] < w[j] {
            k = 0;
        } else {
            k += 1;
        }
        j += 1;
    }
    j == n && k == 0
}

/// Lyndon words selected by `filter`, in lexicographic order.
pub fn lyndon_words(alphabet: &Alphabet, filter: &WordFilter) -> Vec<Word> {
    match filter {
        WordFilter::Length(n) => lyndon_of_length(alphabet.len(), *n),
        WordFilter::MultiDegree(md) => {
            let mut out = Vec::new();
            for_each_arrangement(md.sorted_letters(), |w| {
                if is_lyndon(w) {
                    out.push(Word(w.to_vec()));
                }
            });
            out
        }
    }
}

/// Every word selected by `filter`, in lexicographic order.
pub fn words_matching(alphabet: &Alphabet, filter: &WordFilter) -> Vec<Word> {
    let mut out = Vec::new();
    match filter {
        WordFilter::Length(n) => {
            let d = alphabet.len();
            if *n == 0 || d == 0 {
                return out;
            }
            let mut cur = vec![0u16; *n];
            loop {
                out.push(Word(cur.iter().map(|&i| Letter(i)).collect()));
                let mut pos = *n;
                loop {
                    if pos == 0 {
                        return out;
                    }
                    pos -= 1;
                    if (cur[pos] as usize) + 1 < d {
                        cur[pos] += 1;
                        for c in cur.iter_mut().skip(pos + 1) {
                            *c = 0;
                        }
                        break;
                    }
                }
            }
        }
        WordFilter::MultiDegree(md) => {
            for_each_arrangement(md.sorted_letters(), |w| out.push(Word(w.to_vec())));
            out
        }
    }
}

// Generates Lyndon words of length <= n in lexicographic order and keeps
// those of length exactly n.
fn lyndon_of_length(d: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || d == 0 {
        return out;
    }
    let top = (d - 1) as u16;
    let mut w: Vec<u16> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word(w.iter().map(|&i| Letter(i)).collect()));
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return out,
        }
    }
}

// Visits the distinct permutations of `letters` in lexicographic order.
fn for_each_arrangement(mut letters: Vec<Letter>, mut visit: impl FnMut(&[Letter])) {
    if letters.is_empty() {
        return;
    }
    letters.sort();
    loop {
        visit(&letters);
        let Some(i) = (0..letters.len() - 1).rev().find(|&i| letters[i] < letters[i + 1]) else {
            return;
        };
        let j = (i + 1..letters.len()).rev().find(|&j| letters[j] > letters[i]).unwrap();
        letters.swap(i, j);
        letters[i + 1..].reverse();
    }
}
