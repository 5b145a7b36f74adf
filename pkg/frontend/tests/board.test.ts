import { describe, expect, it } from "vitest";

import {
  classId,
  destinationsFor,
  formatMove,
  moveFor,
  parseMove,
  selectableSources,
} from "../src/board.js";

// deterministic PRNG so the generated-position sweep is reproducible
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

interface Mock {
  classes: { color: number; height: number }[];
  legal: string[];
}

/** A mocked service position: some stack classes plus an arbitrary set
 * of legal moves over them (the client must mirror it blindly). */
function generatePosition(rand: () => number): Mock {
  const count = 2 + Math.floor(rand() * 6);
  const classes: { color: number; height: number }[] = [];
  const seen = new Set<string>();
  while (classes.length < count) {
    const ref = {
      color: Math.floor(rand() * 3),
      height: 1 + Math.floor(rand() * 8),
    };
    if (!seen.has(classId(ref))) {
      seen.add(classId(ref));
      classes.push(ref);
    }
  }
  const legal: string[] = [];
  for (const src of classes) {
    for (const dst of classes) {
      if (src === dst && rand() < 0.5) continue;
      if (rand() < 0.45) legal.push(formatMove(src, dst));
    }
  }
  return { classes, legal };
}

describe("clickable destinations mirror the mocked legal-move list", () => {
  it("holds on every generated position", () => {
    const rand = mulberry32(20240811);
    for (let round = 0; round < 500; round++) {
      const { classes, legal } = generatePosition(rand);
      for (const source of classes) {
        const expected = new Set(
          legal
            .filter((m) => m.startsWith(`${classId(source)}>`))
            .map((m) => m.split(">")[1]),
        );
        const clickable = destinationsFor(source, legal).map(classId);
        expect(new Set(clickable)).toEqual(expected);
        expect(clickable.length).toBe(expected.size); // no duplicates
        // and every clickable destination submits a listed move
        for (const dst of destinationsFor(source, legal)) {
          const move = moveFor(source, dst, legal);
          expect(move).not.toBeNull();
          expect(legal).toContain(move);
        }
      }
    }
  });

  it("never offers a move outside the list", () => {
    const rand = mulberry32(7);
    for (let round = 0; round < 200; round++) {
      const { classes, legal } = generatePosition(rand);
      const set = new Set(legal);
      for (const src of classes) {
        for (const dst of classes) {
          const move = moveFor(src, dst, legal);
          if (move === null) {
            expect(set.has(formatMove(src, dst))).toBe(false);
          } else {
            expect(set.has(move)).toBe(true);
          }
        }
      }
    }
  });

  it("selectable sources are exactly the move sources", () => {
    const rand = mulberry32(99);
    for (let round = 0; round < 200; round++) {
      const { legal } = generatePosition(rand);
      const expected = new Set(legal.map((m) => m.split(">")[0]));
      const got = new Set(selectableSources(legal).map(classId));
      expect(got).toEqual(expected);
    }
  });
});

describe("move grammar helpers", () => {
  it("parses and formats the service grammar", () => {
    const move = parseMove("r@1>b@4");
    expect(move.source).toEqual({ color: 0, height: 1 });
    expect(move.destination).toEqual({ color: 1, height: 4 });
    expect(formatMove(move.source, move.destination)).toBe("r@1>b@4");
  });

  it("handles high color indexes", () => {
    const move = parseMove("y@2>c4@2");
    expect(move.source).toEqual({ color: 3, height: 2 });
    expect(move.destination).toEqual({ color: 4, height: 2 });
  });
});
