use pcm_core::BinaryMatrix;

use pcm_checker::{check_batch, pack_batch, SparseRows, BATCH_WIDTH};

/// Result of checking a file of words against a matrix.
pub struct CheckOutcome {
    verdicts: Vec<bool>,
    xor_ops_per_batch: usize,
}

impl CheckOutcome {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, ok) in self.verdicts.iter().enumerate() {
            let verdict = if *ok { "ok" } else { "fail" };
            out.push_str(&format!("word {i}: {verdict}\n"));
        }
        let codewords = self.verdicts.iter().filter(|&&ok| ok).count();
        out.push_str(&format!(
            "checked={} codewords={} xor_ops_per_batch={}\n",
            self.verdicts.len(),
            codewords,
            self.xor_ops_per_batch
        ));
        out
    }
}

/// Parses one ASCII 0/1 word per line and batch-checks them all.
pub fn check_words_text(h: &BinaryMatrix, text: &str) -> Result<CheckOutcome, String> {
    let n = h.cols();
    let mut parsed: Vec<Vec<bool>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        if line.len() != n {
            return Err(format!(
                "line {}: expected {} symbols, got {}",
                lineno + 1,
                n,
                line.len()
            ));
        }
        let word: Option<Vec<bool>> = line
            .bytes()
            .map(|b| match b {
                b'0' => Some(false),
                b'1' => Some(true),
                _ => None,
            })
            .collect();
        match word {
            Some(w) => parsed.push(w),
            None => return Err(format!("line {}: symbols must be 0 or 1", lineno + 1)),
        }
    }
    if parsed.is_empty() {
        return Err("no words to check".to_string());
    }

    let rows = SparseRows::from_matrix(h);
    let mut verdicts = Vec::with_capacity(parsed.len());
    let mut xor_ops_per_batch = 0;
    for chunk in parsed.chunks(BATCH_WIDTH) {
        let batch = pack_batch(chunk).expect("uniform length checked above");
        let syndromes = check_batch(&rows, &batch).expect("widths match");
        xor_ops_per_batch = syndromes.xor_ops();
        for b in 0..chunk.len() {
            verdicts.push(syndromes.is_codeword(b));
        }
    }
    Ok(CheckOutcome {
        verdicts,
        xor_ops_per_batch,
    })
}
