import {
  arrowSegment,
  arrowsFromB,
  parallelOffsets,
  vertexPositions,
} from "./layout";
import { machineMatrixLine } from "./machine";
import { PRESET_LABELS, PRESET_ORDER } from "./presets";
import { ViewState } from "./types";

export interface Handlers {
  clickVertex(k: number): void;
  undo(): void;
  reset(): void;
  loadPreset(name: string): void;
  loadText(text: string): void;
}

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 320;
const VERTEX_RADIUS = 18;

function el(
  doc: Document,
  tag: string,
  className?: string,
  text?: string,
): HTMLElement {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function matrixTable(doc: Document, rows: number[][]): HTMLElement {
  const table = el(doc, "table", "matrix");
  for (const row of rows) {
    const tr = doc.createElement("tr");
    for (const entry of row) {
      const td = el(doc, "td", undefined, String(entry));
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
  return table;
}

// The C panel colors whole columns by their sign and pins a Schur badge
// under each one, so sign-coherence and certification are visible at a
// glance.
function cPanel(doc: Document, view: ViewState): HTMLElement {
  const panel = el(doc, "div", "panel");
  panel.appendChild(el(doc, "h3", undefined, "C"));
  const state = view.state!;
  const table = el(doc, "table", "matrix");
  for (const row of state.c) {
    const tr = doc.createElement("tr");
    row.forEach((entry, j) => {
      const td = el(doc, "td", `col-${state.columns[j].sign}`, String(entry));
      tr.appendChild(td);
    });
    table.appendChild(tr);
  }
  panel.appendChild(table);
  const badges = el(doc, "div", "badges");
  for (const column of state.columns) {
    const chip = el(doc, "span", `badge badge-${column.schur}`, column.schur);
    chip.title = `(${column.vector.join(", ")})`;
    badges.appendChild(chip);
  }
  panel.appendChild(badges);
  return panel;
}

function quiverSvg(doc: Document, view: ViewState, handlers: Handlers): Element {
  const state = view.state!;
  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  svg.setAttribute("class", "quiver");

  const defs = doc.createElementNS(SVG_NS, "defs");
  const marker = doc.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "head");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "6");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const tip = doc.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M0,0 L6,3 L0,6 z");
  marker.appendChild(tip);
  defs.appendChild(marker);
  svg.appendChild(defs);

  const positions = vertexPositions(state.n, SIZE / 2, SIZE / 2, SIZE / 2 - 50);
  for (const [from, to, mult] of arrowsFromB(state.b)) {
    for (const offset of parallelOffsets(mult)) {
      const seg = arrowSegment(
        positions[from - 1],
        positions[to - 1],
        offset,
        VERTEX_RADIUS,
      );
      const line = doc.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", seg.x1.toFixed(1));
      line.setAttribute("y1", seg.y1.toFixed(1));
      line.setAttribute("x2", seg.x2.toFixed(1));
      line.setAttribute("y2", seg.y2.toFixed(1));
      line.setAttribute("class", "arrow");
      line.setAttribute("marker-end", "url(#head)");
      svg.appendChild(line);
    }
  }

  positions.forEach((pos, i) => {
    const k = i + 1;
    const group = doc.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "vertex");
    group.setAttribute("data-vertex", String(k));
    const circle = doc.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", pos.x.toFixed(1));
    circle.setAttribute("cy", pos.y.toFixed(1));
    circle.setAttribute("r", String(VERTEX_RADIUS));
    const label = doc.createElementNS(SVG_NS, "text");
    label.setAttribute("x", pos.x.toFixed(1));
    label.setAttribute("y", (pos.y + 5).toFixed(1));
    label.setAttribute("text-anchor", "middle");
    label.textContent = String(k);
    group.appendChild(circle);
    group.appendChild(label);
    group.addEventListener("click", () => handlers.clickVertex(k));
    svg.appendChild(group);
  });
  return svg;
}

export function render(root: HTMLElement, view: ViewState, handlers: Handlers): void {
  const doc = root.ownerDocument;
  root.textContent = "";

  const header = el(doc, "div", "header");
  header.appendChild(el(doc, "h1", undefined, "mutation explorer"));
  const presetBar = el(doc, "div", "presets");
  for (const name of PRESET_ORDER) {
    const button = el(doc, "button", "preset", PRESET_LABELS[name]);
    button.setAttribute("data-preset", name);
    button.addEventListener("click", () => handlers.loadPreset(name));
    presetBar.appendChild(button);
  }
  header.appendChild(presetBar);

  const loader = el(doc, "div", "loader");
  const box = doc.createElement("textarea");
  box.className = "load-box";
  box.placeholder = '{"n": 2, "arrows": [[1, 2, 2]]}';
  const loadButton = el(doc, "button", "load", "load quiver");
  loadButton.addEventListener("click", () => handlers.loadText(box.value));
  loader.appendChild(box);
  loader.appendChild(loadButton);
  if (view.loadError) {
    loader.appendChild(el(doc, "div", "load-error", view.loadError));
  }
  header.appendChild(loader);
  root.appendChild(header);

  if (view.banner) {
    root.appendChild(el(doc, "div", "banner", view.banner));
  }

  if (!view.state) {
    root.appendChild(el(doc, "div", "empty", "no session"));
    return;
  }
  const state = view.state;

  const main = el(doc, "div", "main");
  const left = el(doc, "div", "left");
  left.appendChild(quiverSvg(doc, view, handlers));
  if (!state.acyclic) {
    left.appendChild(
      el(doc, "div", "note", "non-acyclic quiver: Schur badges not computed"),
    );
  }
  main.appendChild(left);

  const right = el(doc, "div", "right");

  const crumb = el(doc, "div", "breadcrumb");
  crumb.appendChild(
    el(
      doc,
      "span",
      "word",
      state.word.length ? `word: [${state.word.join(", ")}]` : "word: []",
    ),
  );
  const undoButton = el(doc, "button", "undo", "undo");
  undoButton.addEventListener("click", () => handlers.undo());
  const resetButton = el(doc, "button", "reset", "reset");
  resetButton.addEventListener("click", () => handlers.reset());
  crumb.appendChild(undoButton);
  crumb.appendChild(resetButton);
  if (view.pending > 0) {
    crumb.appendChild(el(doc, "span", "pending", `… ${view.pending}`));
  }
  right.appendChild(crumb);

  const panels = el(doc, "div", "panels");
  const bPanel = el(doc, "div", "panel");
  bPanel.appendChild(el(doc, "h3", undefined, "B"));
  bPanel.appendChild(matrixTable(doc, state.b));
  panels.appendChild(bPanel);
  panels.appendChild(cPanel(doc, view));
  const gPanel = el(doc, "div", "panel");
  gPanel.appendChild(el(doc, "h3", undefined, "G"));
  gPanel.appendChild(matrixTable(doc, state.g));
  panels.appendChild(gPanel);
  right.appendChild(panels);

  // machine strip: the same bytes the CLI prints for this seed
  const strip = el(doc, "div", "machine");
  for (const [name, rows] of [
    ["B", state.b],
    ["C", state.c],
    ["G", state.g],
  ] as Array<[string, number[][]]>) {
    const line = el(doc, "code", "machine-line", machineMatrixLine(name, rows));
    line.setAttribute("data-machine", name);
    strip.appendChild(line);
  }
  right.appendChild(strip);

  main.appendChild(right);
  root.appendChild(main);
}
