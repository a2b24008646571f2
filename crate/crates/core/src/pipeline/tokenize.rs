use alloc::vec::Vec;

fn is_joiner(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}' | '-')
}

/// Splits a sentence into word and punctuation tokens.
///
/// Apostrophes and hyphens between two alphanumerics stay inside the word;
/// every other non-alphanumeric character is punctuation. A run of the same
/// punctuation character (`...`, `--`) forms one token.
pub fn tokenize(sentence: &str) -> Vec<&str> {
    let mut tokens = Vec::new();
    for chunk in sentence.split_whitespace() {
        let chars: Vec<(usize, char)> = chunk.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (start, c) = chars[i];
            let mut j = i + 1;
            if c.is_alphanumeric() {
                while j < chars.len() {
                    let cj = chars[j].1;
                    let joins = is_joiner(cj)
                        && chars[j - 1].1.is_alphanumeric()
                        && chars.get(j + 1).is_some_and(|&(_, n)| n.is_alphanumeric());
                    if cj.is_alphanumeric() || joins {
                        j += 1;
                    } else {
                        break;
                    }
                }
            } else {
                while j < chars.len() && chars[j].1 == c {
                    j += 1;
                }
            }
            let end = chars.get(j).map_or(chunk.len(), |&(e, _)| e);
            tokens.push(&chunk[start..end]);
            i = j;
        }
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;
    use proptest::prelude::*;

    #[test]
    fn splits_ampersand_and_words() {
        assert_eq!(
            tokenize("what prudency & care a Tutour must vse"),
            ["what", "prudency", "&", "care", "a", "Tutour", "must", "vse"]
        );
    }

    #[test]
    fn empty_sentence() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("  \t ").is_empty());
    }

    #[test]
    fn separates_punctuation() {
        assert_eq!(tokenize("seene: And"), ["seene", ":", "And"]);
        assert_eq!(tokenize("(Yes.)"), ["(", "Yes", ".", ")"]);
        assert_eq!(tokenize("wait..."), ["wait", "..."]);
        assert_eq!(tokenize("prudency&care"), ["prudency", "&", "care"]);
    }

    #[test]
    fn keeps_word_internal_apostrophes_and_hyphens() {
        assert_eq!(tokenize("Luther's time"), ["Luther's", "time"]);
        assert_eq!(tokenize("it selfe-same 'tis"), ["it", "selfe-same", "'", "tis"]);
        assert_eq!(tokenize("brethren'"), ["brethren", "'"]);
    }

    proptest! {
        #[test]
        fn tokens_cover_input(s in "[a-zA-Z'&:,. \\-]{0,50}") {
            let joined: String = tokenize(&s).concat();
            let expected: String = s.chars().filter(|c| !c.is_whitespace()).collect();
            prop_assert_eq!(joined, expected);
        }
    }
}
