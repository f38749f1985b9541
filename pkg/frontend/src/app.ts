import { render } from "./render";
import { Store } from "./store";
import { Transport } from "./transport";

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

// Wire the store to the DOM. Exported so tests can mount the same app
// against a test service and drive it through real click events.
export function mountApp(
  root: HTMLElement,
  serviceBase: string,
  fetchImpl?: FetchLike,
): Store {
  const transport = new Transport(serviceBase, fetchImpl);
  const store = new Store(transport);
  const handlers = {
    clickVertex: (k: number) => void store.clickVertex(k),
    undo: () => void store.undo(),
    reset: () => void store.reset(),
    loadPreset: (name: string) => void store.loadPreset(name),
    loadText: (text: string) => void store.loadDocumentText(text),
  };
  store.subscribe((view) => render(root, view, handlers));
  void store.loadPreset("a2");
  return store;
}

declare global {
  interface Window {
    clusterRootsStore?: Store;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const root = document.getElementById("app") as HTMLElement;
  window.clusterRootsStore = mountApp(root, window.location.origin);
}
