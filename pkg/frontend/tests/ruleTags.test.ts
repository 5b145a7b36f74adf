import { describe, expect, it } from "vitest";

import { KNOWN_TAGS, explainTag } from "../src/ruleTags.js";

describe("rule tag explanations", () => {
  it("covers the scripted vocabulary", () => {
    for (const tag of [
      "opening.xx->yy",
      "even-hill.xz",
      "position1.rR",
      "lemma4.vii.bbB",
      "lemma3.viii.BR",
      "lemma2.best-pair",
      "lemma1.any",
      "fallback",
      "losing-position",
    ]) {
      expect(KNOWN_TAGS).toContain(tag);
      expect(explainTag(tag)).not.toMatch(/^engine rule/);
    }
  });

  it("explains continuation tags generically", () => {
    expect(explainTag("lemma4.iii.continuation")).toMatch(/leaves open/);
    expect(explainTag("lemma3.v.continuation")).toMatch(/leaves open/);
  });

  it("falls back to naming unknown tags", () => {
    expect(explainTag("mystery.tag")).toBe("engine rule mystery.tag");
  });
});
