import { describe, expect, it } from 'vitest';

import type { AssessmentApi } from '../src/api.js';
import { presetById } from '../src/presets.js';
import { clampAnswer, defaultAnswers, gaugeViews, SessionStore } from '../src/state.js';
import type { Answers, Report, WhatIfResponse } from '../src/types.js';

function fakeReport(tag: string): Report {
  const activity = (score: number) => ({
    score,
    display: `${tag}:${score.toFixed(2)}`,
    label: 'Medium',
    level: 3,
  });
  return {
    core_asset: activity(30),
    product_development: activity(31),
    management: activity(32),
    overall: activity(33),
    trace: [],
  };
}

class FakeApi implements AssessmentApi {
  calls: Answers[] = [];
  delayMs = 0;
  failNext = false;

  async assess(answers: Answers, signal?: AbortSignal): Promise<Report> {
    this.calls.push({ ...answers });
    const tag = `call${this.calls.length}`;
    if (this.failNext) {
      this.failNext = false;
      throw new Error('boom');
    }
    if (this.delayMs > 0) {
      await new Promise((resolve, reject) => {
        const timer = setTimeout(resolve, this.delayMs);
        signal?.addEventListener('abort', () => {
          clearTimeout(timer);
          reject(new DOMException('aborted', 'AbortError'));
        });
      });
    }
    return fakeReport(tag);
  }

  async whatif(): Promise<WhatIfResponse> {
    const base = fakeReport('base');
    return {
      base,
      modified: base,
      deltas: {
        core_asset: { score: 0, display: '0.00' },
        product_development: { score: 0, display: '0.00' },
        management: { score: 0, display: '0.00' },
        overall: { score: 0, display: '0.00' },
      },
    };
  }
}

const wait = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

describe('clampAnswer', () => {
  it('keeps values inside the slider bounds', () => {
    expect(clampAnswer(-3)).toBe(0);
    expect(clampAnswer(55)).toBe(50);
    expect(clampAnswer(17.5)).toBe(17.5);
    expect(clampAnswer(Number.NaN)).toBe(0);
  });
});

describe('SessionStore', () => {
  it('starts with all 17 answers bound', () => {
    const answers = defaultAnswers();
    expect(Object.keys(answers)).toHaveLength(17);
    expect(new Set(Object.values(answers))).toEqual(new Set([25]));
  });

  it('marks state stale on edit, fresh after assessment', async () => {
    const api = new FakeApi();
    const store = new SessionStore(api, 1);
    store.setAnswer('q1', 40);
    expect(store.stale).toBe(true);
    await wait(20);
    expect(store.stale).toBe(false);
    expect(store.lastReport).not.toBeNull();
  });

  it('debounces a burst of slider moves into one request', async () => {
    const api = new FakeApi();
    const store = new SessionStore(api, 25);
    for (let i = 0; i < 10; i++) store.setAnswer('q1', i);
    await wait(80);
    expect(api.calls).toHaveLength(1);
    expect(api.calls[0].q1).toBe(9);
  });

  it('latest request wins when responses overlap', async () => {
    const api = new FakeApi();
    const store = new SessionStore(api, 0);
    api.delayMs = 50;
    const first = store.assessNow();
    await wait(5);
    api.delayMs = 0;
    const second = store.assessNow();
    await Promise.all([first, second]);
    await wait(80);
    expect(store.lastReport!.core_asset.display).toBe('call2:30.00');
  });

  it('keeps the previous report and surfaces the error on failure', async () => {
    const api = new FakeApi();
    const store = new SessionStore(api, 0);
    await store.assessNow();
    const before = store.lastReport;
    api.failNext = true;
    await store.assessNow();
    expect(store.error).toBe('boom');
    expect(store.lastReport).toBe(before);
    // a later success clears the error
    await store.assessNow();
    expect(store.error).toBeNull();
  });

  it('loads presets wholesale', async () => {
    const api = new FakeApi();
    const store = new SessionStore(api, 1);
    store.loadAnswers(presetById('case-1')!.answers);
    expect(store.answers.q17).toBe(7);
    await wait(20);
    expect(api.calls[0].q17).toBe(7);
  });

  it('pins and clears scenarios', async () => {
    const api = new FakeApi();
    const store = new SessionStore(api, 0);
    const result = await store.runWhatIf({ q1: 40 });
    store.pinScenario('push q1', { q1: 40 }, result);
    store.pinScenario('again', { q1: 45 }, result);
    expect(store.pinned.map((s) => s.name)).toEqual(['push q1', 'again']);
    store.clearScenarios();
    expect(store.pinned).toHaveLength(0);
  });

  it('notifies subscribers and honors unsubscribe', () => {
    const api = new FakeApi();
    const store = new SessionStore(api, 1000);
    let seen = 0;
    const unsubscribe = store.subscribe(() => {
      seen += 1;
    });
    store.setAnswer('q1', 10);
    unsubscribe();
    store.setAnswer('q2', 10);
    expect(seen).toBe(1);
  });
});

describe('gaugeViews', () => {
  it('passes service display strings through verbatim', () => {
    const report = fakeReport('x');
    report.overall.display = '17.50';
    const views = gaugeViews(report);
    expect(views.map((v) => v.key)).toEqual([
      'core_asset',
      'product_development',
      'management',
      'overall',
    ]);
    expect(views[3].display).toBe('17.50');
    expect(views[0].display).toBe(report.core_asset.display);
  });
});
