import { QuiverDocument } from "./types";

// The same arrow lists the service presets use; the document travels to
// the service as-is, which does all validation and mathematics.
export const PRESETS: Record<string, QuiverDocument> = {
  a2: { n: 2, arrows: [[1, 2, 1]] },
  a3: { n: 3, arrows: [[1, 2, 1], [2, 3, 1]] },
  kronecker: { n: 2, arrows: [[1, 2, 2]] },
  markov: { n: 3, arrows: [[1, 2, 2], [2, 3, 2], [3, 1, 2]] },
  atilde2: { n: 3, arrows: [[1, 2, 1], [2, 3, 1], [3, 1, 2]] },
};

export const PRESET_ORDER = ["a2", "a3", "kronecker", "markov", "atilde2"];

export const PRESET_LABELS: Record<string, string> = {
  a2: "A2",
  a3: "A3",
  kronecker: "Kronecker",
  markov: "Markov",
  atilde2: "A~2 cycle",
};
