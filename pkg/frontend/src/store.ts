import { PRESETS } from "./presets";
import { ServiceError, Transport } from "./transport";
import { QuiverDocument, SessionState, ViewState } from "./types";

type Listener = (view: ViewState) => void;

// Holds the ViewState and talks to the service through the ordered
// queue. Every response replaces the rendered state wholesale: the
// service is authoritative and the panels never drift from it.
export class Store {
  private transport: Transport;
  private view: ViewState = {
    sessionId: null,
    state: null,
    document: null,
    presetName: null,
    pending: 0,
    banner: null,
    loadError: null,
  };
  private listeners: Listener[] = [];

  constructor(transport: Transport) {
    this.transport = transport;
  }

  current(): ViewState {
    return this.view;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  idle(): Promise<void> {
    return this.transport.idle();
  }

  loadPreset(name: string): Promise<void> {
    const doc = PRESETS[name];
    if (!doc) {
      this.patch({ loadError: `unknown preset ${name}` });
      return Promise.resolve();
    }
    return this.createSession(doc, name);
  }

  /** Parse and load a user-entered document; syntax and service errors
   *  land in loadError as an inline message, not in the banner. */
  loadDocumentText(text: string): Promise<void> {
    let doc: unknown;
    try {
      doc = JSON.parse(text);
    } catch (err) {
      this.patch({ loadError: `not valid json: ${(err as Error).message}` });
      return Promise.resolve();
    }
    if (typeof doc !== "object" || doc === null) {
      this.patch({ loadError: "document must be a json object" });
      return Promise.resolve();
    }
    return this.createSession(doc as QuiverDocument, null);
  }

  clickVertex(k: number): Promise<void> {
    const sid = this.view.sessionId;
    if (!sid) return Promise.resolve();
    return this.tracked(async () => {
      const payload = await this.transport.post(`/sessions/${sid}/mutate`, { k });
      this.acceptState(payload.state);
    });
  }

  undo(): Promise<void> {
    const sid = this.view.sessionId;
    if (!sid) return Promise.resolve();
    return this.tracked(async () => {
      const payload = await this.transport.post(`/sessions/${sid}/undo`);
      this.acceptState(payload.state);
    });
  }

  /** Reset = a fresh session for the same document; the service keeps
   *  the only copy of the mutation rule, so no local rewinding. */
  reset(): Promise<void> {
    const doc = this.view.document;
    if (!doc) return Promise.resolve();
    return this.createSession(doc, this.view.presetName);
  }

  private createSession(
    doc: QuiverDocument,
    presetName: string | null,
  ): Promise<void> {
    return this.tracked(async () => {
      try {
        const payload = await this.transport.post("/sessions", doc);
        this.patch({
          sessionId: payload.id,
          document: doc,
          presetName,
          loadError: null,
          banner: null,
        });
        this.acceptState(payload.state);
      } catch (err) {
        if (err instanceof ServiceError && err.status === 400) {
          // malformed document: inline validation message, session keeps
          // whatever it was showing
          this.patch({ loadError: err.message });
          return;
        }
        throw err;
      }
    });
  }

  private acceptState(state: SessionState): void {
    this.patch({ state, banner: null });
  }

  private async tracked(job: () => Promise<void>): Promise<void> {
    this.patch({ pending: this.view.pending + 1 });
    try {
      await job();
    } catch (err) {
      // transport trouble: surface a banner, keep the last good state
      this.patch({ banner: (err as Error).message });
    } finally {
      this.patch({ pending: this.view.pending - 1 });
    }
  }

  private patch(part: Partial<ViewState>): void {
    this.view = { ...this.view, ...part };
    for (const listener of this.listeners) listener(this.view);
  }
}
