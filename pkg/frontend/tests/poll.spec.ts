import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { startPolling } from '../src/poll.js';

describe('startPolling', () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it('runs the tick once per interval', async () => {
    const tick = vi.fn().mockResolvedValue(undefined);
    const poller = startPolling(tick, 1000);
    expect(tick).not.toHaveBeenCalled();
    await vi.advanceTimersByTimeAsync(1000);
    expect(tick).toHaveBeenCalledTimes(1);
    await vi.advanceTimersByTimeAsync(2000);
    expect(tick).toHaveBeenCalledTimes(3);
    poller.stop();
  });

  it('never overlaps ticks: the next one waits for the last to finish', async () => {
    let inFlight = 0;
    let maxInFlight = 0;
    const tick = vi.fn(async () => {
      inFlight += 1;
      maxInFlight = Math.max(maxInFlight, inFlight);
      // the response takes 5 intervals to arrive
      await new Promise<void>((resolve) => setTimeout(resolve, 5000));
      inFlight -= 1;
    });
    const poller = startPolling(tick, 1000);
    await vi.advanceTimersByTimeAsync(10_000);
    expect(maxInFlight).toBe(1);
    // 10s of fake time fits one 5s tick plus the 1s gap and most of a second tick
    expect(tick.mock.calls.length).toBeLessThanOrEqual(2);
    poller.stop();
  });

  it('stops cleanly and never ticks again', async () => {
    const tick = vi.fn().mockResolvedValue(undefined);
    const poller = startPolling(tick, 1000);
    await vi.advanceTimersByTimeAsync(1000);
    expect(tick).toHaveBeenCalledTimes(1);
    poller.stop();
    await vi.advanceTimersByTimeAsync(10_000);
    expect(tick).toHaveBeenCalledTimes(1);
  });

  it('stopping mid-tick cancels the reschedule', async () => {
    const tick = vi.fn(
      () => new Promise<void>((resolve) => setTimeout(resolve, 3000)),
    );
    const poller = startPolling(tick, 1000);
    await vi.advanceTimersByTimeAsync(1500); // tick is now in flight
    expect(tick).toHaveBeenCalledTimes(1);
    poller.stop();
    await vi.advanceTimersByTimeAsync(20_000);
    expect(tick).toHaveBeenCalledTimes(1);
  });

  it('reports errors and keeps polling', async () => {
    const failures: unknown[] = [];
    const tick = vi
      .fn()
      .mockRejectedValueOnce(new Error('transient'))
      .mockResolvedValue(undefined);
    const poller = startPolling(tick, 1000, (error) => failures.push(error));
    await vi.advanceTimersByTimeAsync(3000);
    expect(tick).toHaveBeenCalledTimes(3);
    expect(failures).toHaveLength(1);
    expect((failures[0] as Error).message).toBe('transient');
    poller.stop();
  });
});
