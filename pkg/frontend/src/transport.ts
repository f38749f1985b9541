// Strictly ordered request queue: one request in flight, later calls
// wait their turn, so a burst of vertex clicks reaches the service in
// click order.

export class ServiceError extends Error {
  status: number;
  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class Transport {
  private base: string;
  private fetchImpl: FetchLike;
  private tail: Promise<unknown> = Promise.resolve();
  private inFlight = 0;

  constructor(base: string, fetchImpl?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  /** Requests currently executing (0 or 1 by construction). */
  get active(): number {
    return this.inFlight;
  }

  /** Resolves once everything queued so far has settled. */
  idle(): Promise<void> {
    return this.tail.then(
      () => undefined,
      () => undefined,
    );
  }

  post(path: string, body?: unknown): Promise<any> {
    return this.enqueue(() =>
      this.request(path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body ?? {}),
      }),
    );
  }

  get(path: string): Promise<any> {
    return this.enqueue(() => this.request(path, { method: "GET" }));
  }

  private enqueue<T>(job: () => Promise<T>): Promise<T> {
    const run = this.tail.then(
      () => job(),
      () => job(), // a failed predecessor does not block the queue
    );
    this.tail = run.then(
      () => undefined,
      () => undefined,
    );
    return run;
  }

  private async request(path: string, init: RequestInit): Promise<any> {
    this.inFlight += 1;
    try {
      const response = await this.fetchImpl(this.base + path, init);
      const text = await response.text();
      let payload: any = null;
      try {
        payload = text ? JSON.parse(text) : null;
      } catch {
        payload = null;
      }
      if (!response.ok) {
        const detail =
          payload && typeof payload.detail === "string"
            ? payload.detail
            : `service returned ${response.status}`;
        throw new ServiceError(response.status, detail);
      }
      return payload;
    } finally {
      this.inFlight -= 1;
    }
  }
}
