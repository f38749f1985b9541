// @vitest-environment happy-dom
import { describe, expect, it } from "vitest";
import { render, Handlers } from "../src/render";
import { SessionState, ViewState } from "../src/types";

function view(state: SessionState | null, extra: Partial<ViewState> = {}): ViewState {
  return {
    sessionId: state ? "s1" : null,
    state,
    document: null,
    presetName: null,
    pending: 0,
    banner: null,
    loadError: null,
    ...extra,
  };
}

function handlers(clicked: number[] = []): Handlers {
  return {
    clickVertex: (k) => clicked.push(k),
    undo: () => {},
    reset: () => {},
    loadPreset: () => {},
    loadText: () => {},
  };
}

const kroneckerState: SessionState = {
  n: 2,
  b: [[0, 2], [-2, 0]],
  c: [[1, 0], [0, 1]],
  g: [[1, 0], [0, 1]],
  word: [],
  acyclic: true,
  columns: [
    { vector: [1, 0], sign: "positive", schur: "certified" },
    { vector: [0, 1], sign: "positive", schur: "certified" },
  ],
};

describe("render", () => {
  it("draws one clickable group per vertex and forwards the 1-based number", () => {
    const root = document.createElement("div");
    const clicked: number[] = [];
    render(root, view(kroneckerState), handlers(clicked));
    const groups = root.querySelectorAll("g.vertex");
    expect(groups.length).toBe(2);
    (groups[1] as Element).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    expect(clicked).toEqual([2]);
  });

  it("shows multiplicity as parallel arrow lines", () => {
    const root = document.createElement("div");
    render(root, view(kroneckerState), handlers());
    expect(root.querySelectorAll("line.arrow").length).toBe(2);
  });

  it("colors c-columns by sign and pins one badge per column", () => {
    const state: SessionState = {
      ...kroneckerState,
      c: [[-1, 1], [0, 1]],
      columns: [
        { vector: [-1, 0], sign: "negative", schur: "certified" },
        { vector: [1, 1], sign: "positive", schur: "inconclusive" },
      ],
    };
    const root = document.createElement("div");
    render(root, view(state), handlers());
    expect(root.querySelectorAll("td.col-negative").length).toBe(2);
    expect(root.querySelectorAll("td.col-positive").length).toBe(2);
    const badges = [...root.querySelectorAll(".badge")].map(
      (b) => b.textContent,
    );
    expect(badges).toEqual(["certified", "inconclusive"]);
  });

  it("prints machine lines matching the CLI byte format", () => {
    const root = document.createElement("div");
    render(root, view(kroneckerState), handlers());
    const line = root.querySelector('[data-machine="C"]');
    expect(line?.textContent).toBe('{"name":"C","rows":[[1,0],[0,1]]}');
  });

  it("renders the breadcrumb word and a pending marker", () => {
    const state = { ...kroneckerState, word: [1, 2, 1] };
    const root = document.createElement("div");
    render(root, view(state, { pending: 2 }), handlers());
    expect(root.querySelector(".word")?.textContent).toBe("word: [1, 2, 1]");
    expect(root.querySelector(".pending")?.textContent).toContain("2");
  });

  it("surfaces banner and inline load errors in separate places", () => {
    const root = document.createElement("div");
    render(
      root,
      view(kroneckerState, {
        banner: "connection refused",
        loadError: "arrows form a 2-cycle",
      }),
      handlers(),
    );
    expect(root.querySelector(".banner")?.textContent).toBe(
      "connection refused",
    );
    expect(root.querySelector(".load-error")?.textContent).toContain("2-cycle");
  });

  it("marks non-acyclic sessions and not-computed badges", () => {
    const markov: SessionState = {
      n: 3,
      b: [
        [0, 2, -2],
        [-2, 0, 2],
        [2, -2, 0],
      ],
      c: [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
      ],
      g: [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
      ],
      word: [],
      acyclic: false,
      columns: [
        { vector: [1, 0, 0], sign: "positive", schur: "not-computed" },
        { vector: [0, 1, 0], sign: "positive", schur: "not-computed" },
        { vector: [0, 0, 1], sign: "positive", schur: "not-computed" },
      ],
    };
    const root = document.createElement("div");
    render(root, view(markov), handlers());
    expect(root.querySelector(".note")?.textContent).toContain("non-acyclic");
    expect(root.querySelectorAll(".badge-not-computed").length).toBe(3);
    // the markov triangle: three double arrows drawn as six lines
    expect(root.querySelectorAll("line.arrow").length).toBe(6);
  });

  it("offers the five presets", () => {
    const root = document.createElement("div");
    render(root, view(null), handlers());
    const names = [...root.querySelectorAll("button.preset")].map((b) =>
      b.getAttribute("data-preset"),
    );
    expect(names).toEqual(["a2", "a3", "kronecker", "markov", "atilde2"]);
  });
});
