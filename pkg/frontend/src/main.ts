/** Single-page client: render the stacks, let the human click a source
 * and a highlighted destination, fetch the engine's reply, and annotate
 * it with its rule tag. All state comes from the last service response. */

import { GameApi, SessionView, httpApi } from "./api.js";
import {
  ClassRef,
  classId,
  destinationsFor,
  moveFor,
  selectableSources,
} from "./board.js";
import { explainTag } from "./ruleTags.js";

const CHIP_COLORS = ["#c0392b", "#2980b9", "#27ae60", "#f1c40f"];

interface UiState {
  session: SessionView | null;
  legalMoves: string[];
  selected: ClassRef | null;
  busy: boolean;
}

const ui: UiState = { session: null, legalMoves: [], selected: null, busy: false };
const api: GameApi = httpApi();

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function sideWord(side: string): string {
  return side === "first" ? "first player" : "second player";
}

async function engineReply(): Promise<void> {
  if (!ui.session || ui.busy) return;
  ui.busy = true;
  render();
  try {
    const view = await api.engineMove(ui.session.id);
    ui.session = view;
    ui.legalMoves =
      view.status === "in-progress" ? await api.legalMoves(view.id) : [];
    ui.selected = null;
  } catch (error) {
    showError(error);
  } finally {
    ui.busy = false;
    render();
  }
}

function showError(error: unknown): void {
  const box = el<HTMLDivElement>("error");
  box.textContent = error instanceof Error ? error.message : String(error);
  box.style.display = "block";
  setTimeout(() => (box.style.display = "none"), 4000);
}

async function onStackClick(ref: ClassRef): Promise<void> {
  const session = ui.session;
  if (!session || session.status !== "in-progress" || ui.busy) return;
  if (session.to_move !== session.human_side) return;
  if (ui.selected) {
    const move = moveFor(ui.selected, ref, ui.legalMoves);
    if (move) {
      ui.busy = true;
      render();
      try {
        ui.session = await api.submitMove(session.id, move);
        ui.legalMoves =
          ui.session.status === "in-progress"
            ? await api.legalMoves(session.id)
            : [];
        ui.selected = null;
      } catch (error) {
        showError(error);
        // a race with another client: resync from the service
        ui.session = await api.getGame(session.id);
        ui.legalMoves = await api.legalMoves(session.id);
      } finally {
        ui.busy = false;
      }
      render();
      const auto = el<HTMLInputElement>("auto-reply").checked;
      if (
        auto &&
        ui.session &&
        ui.session.status === "in-progress" &&
        ui.session.to_move === ui.session.engine_side
      ) {
        await engineReply();
      }
      return;
    }
    if (ui.selected.color === ref.color && ui.selected.height === ref.height) {
      ui.selected = null;
      render();
      return;
    }
  }
  const sources = selectableSources(ui.legalMoves).map(classId);
  if (sources.includes(classId(ref))) {
    ui.selected = ref;
    render();
  }
}

function chipColumn(ref: ClassRef, count: number, highlight: string): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = `stack ${highlight}`;
  wrap.title = `${classId(ref)} (x${count})`;
  const column = document.createElement("div");
  column.className = "chips";
  for (let i = 0; i < Math.min(ref.height, 14); i++) {
    const chip = document.createElement("div");
    chip.className = "chip";
    // only the top chip's color matters; lower chips are drawn muted
    chip.style.background = i === 0 ? CHIP_COLORS[ref.color] ?? "#888" : "#d5d8dc";
    chip.style.borderColor = CHIP_COLORS[ref.color] ?? "#888";
    column.appendChild(chip);
  }
  const label = document.createElement("div");
  label.className = "stack-label";
  label.textContent = count > 1 ? `${classId(ref)} ×${count}` : classId(ref);
  wrap.appendChild(column);
  wrap.appendChild(label);
  wrap.addEventListener("click", () => void onStackClick(ref));
  return wrap;
}

function render(): void {
  const session = ui.session;
  const board = el<HTMLDivElement>("board");
  const banner = el<HTMLDivElement>("banner");
  const history = el<HTMLUListElement>("history");
  const status = el<HTMLDivElement>("status");
  board.innerHTML = "";
  history.innerHTML = "";
  if (!session) {
    banner.textContent = "start a game";
    status.textContent = "";
    return;
  }

  if (session.status === "finished" && session.winner) {
    const youWon = session.winner === session.human_side;
    banner.textContent = `game over: the ${sideWord(session.winner)} wins, ${
      youWon ? "that's you!" : "the engine"
    }`;
  } else if (session.predicted_winner) {
    banner.textContent = `${sideWord(session.predicted_winner)} wins with best play; you are the ${sideWord(session.human_side)}`;
  }

  const destinations = ui.selected
    ? destinationsFor(ui.selected, ui.legalMoves).map(classId)
    : [];
  const sources = selectableSources(ui.legalMoves).map(classId);
  const humanTurn =
    session.status === "in-progress" && session.to_move === session.human_side;

  for (const stack of session.stacks) {
    const ref = { color: stack.color, height: stack.height };
    let highlight = "";
    if (humanTurn && ui.selected && destinations.includes(classId(ref))) {
      highlight = "destination";
    } else if (
      humanTurn &&
      ui.selected &&
      classId(ref) === classId(ui.selected)
    ) {
      highlight = "selected";
    } else if (humanTurn && !ui.selected && sources.includes(classId(ref))) {
      highlight = "source";
    }
    board.appendChild(chipColumn(ref, stack.count, highlight));
  }

  status.textContent = ui.busy
    ? "thinking..."
    : session.status === "finished"
      ? `final position ${session.state_angle ?? session.state}`
      : `${session.state_angle ?? session.state}  ${
          humanTurn
            ? ui.selected
              ? "pick a highlighted destination"
              : "pick a stack to move"
            : "engine to move"
        }`;

  for (const entry of session.history) {
    const item = document.createElement("li");
    const actor = entry.actor === "human" ? "you" : "engine";
    item.textContent = `${entry.seq}. ${actor}: ${entry.move}`;
    if (entry.rule_tag) {
      const tag = document.createElement("span");
      tag.className = "tag";
      tag.textContent = ` [${entry.rule_tag}]`;
      tag.title = explainTag(entry.rule_tag);
      item.appendChild(tag);
      const why = document.createElement("div");
      why.className = "why";
      why.textContent = explainTag(entry.rule_tag);
      item.appendChild(why);
    }
    history.appendChild(item);
  }
  history.scrollTop = history.scrollHeight;

  el<HTMLButtonElement>("engine-move").disabled =
    ui.busy ||
    session.status !== "in-progress" ||
    session.to_move !== session.engine_side;
}

async function newGame(): Promise<void> {
  const p = parseInt(el<HTMLInputElement>("p").value, 10);
  const q = parseInt(el<HTMLInputElement>("q").value, 10);
  const side = el<HTMLSelectElement>("side").value;
  if (!Number.isInteger(p) || !Number.isInteger(q) || p < 1 || q < p) {
    showError(new Error("need 1 <= p <= q"));
    return;
  }
  try {
    ui.session = await api.createGame(p, q, side);
    ui.legalMoves = await api.legalMoves(ui.session.id);
    ui.selected = null;
    render();
    if (
      ui.session.to_move === ui.session.engine_side &&
      el<HTMLInputElement>("auto-reply").checked
    ) {
      await engineReply();
    }
  } catch (error) {
    showError(error);
  }
}

export function start(): void {
  el<HTMLButtonElement>("new-game").addEventListener("click", () => void newGame());
  el<HTMLButtonElement>("engine-move").addEventListener(
    "click",
    () => void engineReply(),
  );
  render();
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  start();
}
