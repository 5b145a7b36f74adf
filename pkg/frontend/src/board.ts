/** Pure board view-model. Clickable destinations are derived only from
 * the service's legal-move list, so the client can never construct a
 * move the service would reject. */

export interface ClassRef {
  color: number;
  height: number;
}

const COLOR_LABELS = ["r", "b", "g", "y"];

export function colorLabel(color: number): string {
  return color < COLOR_LABELS.length ? COLOR_LABELS[color] : `c${color}`;
}

export function classId(ref: ClassRef): string {
  return `${colorLabel(ref.color)}@${ref.height}`;
}

export function parseClass(text: string): ClassRef {
  const [label, height] = text.split("@");
  const color =
    COLOR_LABELS.indexOf(label) >= 0
      ? COLOR_LABELS.indexOf(label)
      : parseInt(label.slice(1), 10);
  return { color, height: parseInt(height, 10) };
}

export interface ParsedMove {
  source: ClassRef;
  destination: ClassRef;
}

export function parseMove(text: string): ParsedMove {
  const [src, dst] = text.split(">");
  return { source: parseClass(src), destination: parseClass(dst) };
}

export function formatMove(source: ClassRef, destination: ClassRef): string {
  return `${classId(source)}>${classId(destination)}`;
}

function sameClass(a: ClassRef, b: ClassRef): boolean {
  return a.color === b.color && a.height === b.height;
}

/** Stack classes that begin at least one legal move. */
export function selectableSources(legalMoves: string[]): ClassRef[] {
  const seen = new Map<string, ClassRef>();
  for (const text of legalMoves) {
    const { source } = parseMove(text);
    seen.set(classId(source), source);
  }
  return [...seen.values()];
}

/** Exactly the destinations the service lists for the selected source. */
export function destinationsFor(
  selected: ClassRef,
  legalMoves: string[],
): ClassRef[] {
  const out: ClassRef[] = [];
  const seen = new Set<string>();
  for (const text of legalMoves) {
    const { source, destination } = parseMove(text);
    if (!sameClass(source, selected)) continue;
    const key = classId(destination);
    if (!seen.has(key)) {
      seen.add(key);
      out.push(destination);
    }
  }
  return out;
}

/** The move string to submit for a selection, or null if not legal. */
export function moveFor(
  selected: ClassRef,
  destination: ClassRef,
  legalMoves: string[],
): string | null {
  const wanted = formatMove(selected, destination);
  return legalMoves.includes(wanted) ? wanted : null;
}
