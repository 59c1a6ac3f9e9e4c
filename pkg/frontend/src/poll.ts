/**
 * Recurring refresh driver. The console pulls fresh snapshots on a timer
 * instead of holding a push channel open; each tick finishes (or fails)
 * before the next one is scheduled, so slow responses never overlap.
 */

export interface Poller {
  stop(): void;
}

export function startPolling(
  tick: () => Promise<void>,
  intervalMs: number,
  onError: (error: unknown) => void = () => {},
): Poller {
  let stopped = false;
  let timer: ReturnType<typeof setTimeout> | undefined;

  const run = async (): Promise<void> => {
    try {
      await tick();
    } catch (error) {
      onError(error);
    }
    if (!stopped) {
      timer = setTimeout(run, intervalMs);
    }
  };

  timer = setTimeout(run, intervalMs);
  return {
    stop() {
      stopped = true;
      if (timer !== undefined) clearTimeout(timer);
    },
  };
}
