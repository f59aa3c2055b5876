// Debounced, latest-wins request scheduling. Guarantees of this class:
//
// 1. The final scheduled state always produces a request whose response
//    is applied (trailing-edge debounce, never a drop).
// 2. At most one request is in flight; scheduling aborts the previous one.
// 3. A response is applied only if it belongs to the newest request, so
//    a slow stale response can never overwrite a fresh one.

export class LatestWins {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private controller: AbortController | null = null;
  private sequence = 0;

  constructor(private readonly delayMs: number) {}

  schedule<T>(
    run: (signal: AbortSignal) => Promise<T>,
    apply: (result: T) => void,
    onError: (error: unknown) => void
  ): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.controller?.abort();
      const controller = new AbortController();
      this.controller = controller;
      const ticket = ++this.sequence;
      run(controller.signal).then(
        (result) => {
          if (ticket === this.sequence) apply(result);
        },
        (error) => {
          if (ticket !== this.sequence || controller.signal.aborted) return;
          onError(error);
        }
      );
    }, this.delayMs);
  }
}
