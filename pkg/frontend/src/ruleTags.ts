/** One-line explanations for the engine's rule tags, shown next to each
 * engine reply so the strategy stays legible during play. */

const EXPLANATIONS: Record<string, string> = {
  "opening.xx->yy": "you paired one color, so the engine pairs the other",
  "opening.xy->yx": "you crossed colors, so the engine crosses them back",
  "opening.p5.bb->rb": "five-minority opening: answering your pair crosswise",
  "opening.p5.rb->bb": "five-minority opening: pairing the majority color",
  "opening.p5.br->rr": "five-minority opening: pairing the minority color",
  "opening.p5.rr->br": "five-minority opening: crossing to keep both hills low",
  "opening.p4q4": "balanced game: forcing a second pair of your pair's color",
  "even-hill.xz": "your new pair was stacked onto its color's hill",
  "even-hill.xX": "your singleton push was echoed on the same hill",
  "even-hill.XY": "your capture was answered by rebuilding the buried color's hill",
  "position1.rR": "echoing your push; the hill stays safely below half",
  "position1.exception": "defusing: your push aimed the hill at half the chips",
  "position2.mirrored": "stacking your pair onto the hill, as in position 1",
  "position2.exception": "defusing: stacking would park the hill at half the chips",
  "position3.rr": "rebuilding the captured color's hill from two singletons",
  "lemma4.i.rbR": "your crossed pair was stacked onto the minority hill",
  "lemma4.i.exception": "defusing a half-height threat; both colors will survive",
  "lemma4.ii.brB": "your crossed pair was stacked onto the majority hill",
  "lemma4.ii.exception": "defusing: crossing back to guard the half-height line",
  "lemma4.ii.brrb": "your counter-pair was captured",
  "lemma4.ii.rR": "building the lone minority stack that locks the game",
  "lemma4.iii.br": "your pair threatened a half-height stack; crossing defuses it",
  "lemma4.iii.BR": "equal hills: capturing across",
  "lemma4.iii.rrr": "tripling your pair on the way to a lone minority stack",
  "lemma4.iv.br": "your push neared half the chips; crossing defuses it",
  "lemma4.iv.rR": "climbing the fresh hill past half the chips",
  "lemma4.iv.rr": "answering your push with a pair",
  "lemma4.v.br": "capture answered defensively near the half-height line",
  "lemma4.v.rr": "capture answered with a pair near the half-height line",
  "lemma4.v.easy": "capture far from the danger line; playing a computed win",
  "lemma4.vi.rr": "your capture of the minority hill is answered with a pair",
  "lemma4.vii.bbB": "your majority pair was restacked; the position repeats smaller",
  "lemma4.vii.bB": "your majority push was echoed; the position repeats smaller",
  "lemma3.i.rr": "pairing up; the small stack will outlive your capture",
  "lemma3.ii.rr": "your capture landed far from half; pairing up wins",
  "lemma3.ii.rX": "your capture landed exactly at half; climbing it at once",
  "lemma3.ii.m1.rr": "your capture landed one below half; pairing up wins",
  "lemma3.ii.br": "your capture landed two below half; crossing defuses it",
  "lemma3.ii.brrb": "your counter-pair was captured",
  "lemma3.ii.rbbr": "mirror capture: your pair is buried before it matches the tall stack",
  "lemma3.iii.bbB": "your majority pair was restacked onto the majority hill",
  "lemma3.iii.BR": "the majority hill reached half, so it captures across",
  "lemma3.iii.rr": "pairing up instead of leaving two bare equal hills",
  "lemma3.iv.bB": "your majority push was echoed on the majority hill",
  "lemma3.iv.rb": "crossing; the majority hill sits at the half-height line",
  "lemma3.iv.rr": "pairing up instead of leaving two bare equal hills",
  "lemma3.v.rR": "building the lone minority stack that locks the game",
  "lemma3.v.br": "crossing; the minority hill sits one below half",
  "lemma3.vi.rrb": "tripling your crossed pair toward a lone minority stack",
  "lemma3.vi.br": "crossing; the minority hill sits three below half",
  "lemma3.vi.gap": "a known scripting gap; playing a computed win",
  "lemma3.vii.br": "crossing; the minority hill sits two below half",
  "lemma3.vii.ambiguous": "an open scripting branch; playing a computed win",
  "lemma3.viii.rrR": "your pair was stacked onto the minority hill",
  "lemma3.viii.BR": "forced: the majority hill captures the half-height threat",
  "lemma3.viii.bB": "growing the majority hill odd so your pair finds no match",
  "lemma1.any": "a lone stack above half the chips locks the parity; any move wins",
  "lemma2.stack-pair": "the two stacks matching the lone stack were merged away",
  "lemma2.stack-one": "the one stack matching the lone stack was buried",
  "lemma2.best-pair": "building the tallest stack that avoids the lone stack's height",
  "endgame.merge": "merging into a lone stack at a safe height",
  fallback: "no scripted rule covers this game; playing a computed win",
  "losing-position": "no winning move exists; playing on",
};

const CONTINUATION = "continuing a position the rulebook leaves open; computed win";

export function explainTag(tag: string): string {
  if (tag in EXPLANATIONS) return EXPLANATIONS[tag];
  if (tag.endsWith(".continuation")) return CONTINUATION;
  return "engine rule " + tag;
}

export const KNOWN_TAGS = Object.keys(EXPLANATIONS);
