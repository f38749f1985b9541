// End-to-end against the real session service: mount the app in a DOM,
// enter the mutation word by clicking vertices, and require the
// displayed C to match the CLI's machine output byte for byte.
import { execFileSync, spawn, ChildProcess } from "node:child_process";
import net from "node:net";
import { Window } from "happy-dom";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { mountApp } from "../src/app";
import { Store } from "../src/store";

let child: ChildProcess | null = null;
let base = "";

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = net.createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const port = (probe.address() as net.AddressInfo).port;
      probe.close(() => resolve(port));
    });
  });
}

async function waitReady(url: string, timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      // any HTTP response at all means the service is up; an unknown
      // session id just answers 404
      await fetch(`${url}/sessions/probe`);
      return;
    } catch (err) {
      lastError = err;
      await new Promise((resolve) => setTimeout(resolve, 100));
    }
  }
  throw new Error(`service never came up at ${url}: ${lastError}`);
}

interface Mounted {
  store: Store;
  root: HTMLElement;
  win: InstanceType<typeof Window>;
}

async function mount(): Promise<Mounted> {
  const win = new Window({ url: base });
  const doc = win.document;
  doc.body.innerHTML = '<div id="app"></div>';
  const root = doc.getElementById("app") as unknown as HTMLElement;
  const store = mountApp(root, base, fetch as any);
  await store.idle();
  return { store, root, win };
}

async function click(m: Mounted, vertex: number): Promise<void> {
  const target = m.root.querySelector(`[data-vertex="${vertex}"]`);
  expect(target, `vertex ${vertex} rendered`).toBeTruthy();
  (target as any).dispatchEvent(
    new (m.win as any).Event("click", { bubbles: true }),
  );
  await m.store.idle();
}

function machineLine(m: Mounted, name: string): string {
  return m.root.querySelector(`[data-machine="${name}"]`)?.textContent ?? "";
}

beforeAll(async () => {
  const port = await freePort();
  base = `http://127.0.0.1:${port}`;
  child = spawn(
    "cluster-roots",
    ["serve", "--port", String(port), "--host", "127.0.0.1"],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  child.on("error", (err) => {
    throw new Error(`could not launch the service: ${err}`);
  });
  await waitReady(base, 30_000);
}, 40_000);

afterAll(() => {
  child?.kill();
});

describe("UI round-trip against the live service", () => {
  it("word [1,2,1] clicked on A2 shows the CLI's exact C bytes", async () => {
    const m = await mount();
    expect(m.root.querySelectorAll("g.vertex").length).toBe(2);

    await click(m, 1);
    await click(m, 2);
    await click(m, 1);

    expect(m.root.querySelector(".word")?.textContent).toBe("word: [1, 2, 1]");

    const cliOut = execFileSync(
      "cluster-roots",
      ["--output", "machine", "mutate", "a2", "1,2,1"],
      { encoding: "utf8" },
    );
    const cliC = cliOut
      .split("\n")
      .find((line) => line.includes('"name":"C"'));
    expect(cliC).toBeTruthy();
    expect(machineLine(m, "C")).toBe(cliC);
    // byte-identical, not merely structurally equal
    expect(Buffer.from(machineLine(m, "C"), "utf8").equals(
      Buffer.from(cliC as string, "utf8"),
    )).toBe(true);
  }, 30_000);

  it("two clicks on the same vertex restore the panel", async () => {
    const m = await mount();
    await click(m, 1);
    await click(m, 2);
    await click(m, 1);

    const before = {
      b: machineLine(m, "B"),
      c: machineLine(m, "C"),
      g: machineLine(m, "G"),
      panels: m.root.querySelector(".panels")?.innerHTML,
    };
    await click(m, 2);
    // the panel moved somewhere else
    expect(machineLine(m, "C")).not.toBe(before.c);
    await click(m, 2);
    // and two clicks later it is back, matrices and badges alike
    expect(machineLine(m, "B")).toBe(before.b);
    expect(machineLine(m, "C")).toBe(before.c);
    expect(machineLine(m, "G")).toBe(before.g);
    expect(m.root.querySelector(".panels")?.innerHTML).toBe(before.panels);
    // the breadcrumb keeps the full journey
    expect(m.root.querySelector(".word")?.textContent).toBe(
      "word: [1, 2, 1, 2, 2]",
    );
  }, 30_000);

  it("undo steps the service session back one mutation", async () => {
    const m = await mount();
    await click(m, 1);
    const afterOne = machineLine(m, "C");
    await click(m, 2);
    const undoButton = [...m.root.querySelectorAll("button")].find(
      (b) => b.textContent === "undo",
    );
    (undoButton as any).dispatchEvent(
      new (m.win as any).Event("click", { bubbles: true }),
    );
    await m.store.idle();
    expect(machineLine(m, "C")).toBe(afterOne);
    expect(m.root.querySelector(".word")?.textContent).toBe("word: [1]");
  }, 30_000);

  it("markov preset renders the double-arrow triangle with badges off", async () => {
    const m = await mount();
    const button = m.root.querySelector('[data-preset="markov"]');
    (button as any).dispatchEvent(
      new (m.win as any).Event("click", { bubbles: true }),
    );
    await m.store.idle();
    expect(m.root.querySelectorAll("g.vertex").length).toBe(3);
    expect(m.root.querySelectorAll("line.arrow").length).toBe(6);
    const badges = [...m.root.querySelectorAll(".badge")].map(
      (b) => b.textContent,
    );
    expect(badges).toEqual(["not-computed", "not-computed", "not-computed"]);
  }, 30_000);

  it("a 2-cycle document is rejected inline by the service validation", async () => {
    const m = await mount();
    const box = m.root.querySelector("textarea") as any;
    box.value = '{"n": 2, "arrows": [[1, 2], [2, 1]]}';
    const loadButton = [...m.root.querySelectorAll("button")].find(
      (b) => b.textContent === "load quiver",
    );
    (loadButton as any).dispatchEvent(
      new (m.win as any).Event("click", { bubbles: true }),
    );
    await m.store.idle();
    const message = m.root.querySelector(".load-error")?.textContent ?? "";
    expect(message.length).toBeGreaterThan(0);
    expect(message).toContain("2-cycle");
    // the a2 session survives the rejected load
    expect(m.root.querySelectorAll("g.vertex").length).toBe(2);
  }, 30_000);
});
