/** Session state: answers, the live report, and pinned what-if scenarios.
 *
 * All fuzzy math happens on the service; this store only schedules
 * requests (debounced, latest wins) and keeps the last responses.
 */
import type { AssessmentApi } from './api.js';
import { QUESTION_IDS } from './questions.js';
import type { ActivityKey, Answers, Report, WhatIfResponse } from './types.js';
import { ACTIVITY_KEYS } from './types.js';

export interface PinnedScenario {
  name: string;
  overrides: Partial<Answers>;
  result: WhatIfResponse;
}

export interface GaugeView {
  key: ActivityKey;
  /** Verbatim service strings; the UI never reformats scores. */
  display: string;
  label: string;
  level: number;
}

export function gaugeViews(report: Report): GaugeView[] {
  return ACTIVITY_KEYS.map((key) => ({
    key,
    display: report[key].display,
    label: report[key].label,
    level: report[key].level,
  }));
}

export function defaultAnswers(): Answers {
  const out = {} as Answers;
  for (const id of QUESTION_IDS) out[id] = 25;
  return out;
}

export function clampAnswer(value: number): number {
  if (Number.isNaN(value)) return 0;
  return Math.min(50, Math.max(0, value));
}

type Listener = () => void;

export class SessionStore {
  answers: Answers = defaultAnswers();
  lastReport: Report | null = null;
  /** True while the shown report lags behind the answers. */
  stale = false;
  error: string | null = null;
  pinned: PinnedScenario[] = [];

  private listeners: Listener[] = [];
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;
  private generation = 0;

  constructor(
    private api: AssessmentApi,
    private debounceMs = 150,
  ) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  setAnswer(id: keyof Answers, value: number): void {
    this.answers = { ...this.answers, [id]: clampAnswer(value) };
    this.stale = true;
    this.notify();
    this.scheduleAssess();
  }

  loadAnswers(answers: Answers): void {
    this.answers = { ...answers };
    this.stale = true;
    this.notify();
    this.scheduleAssess();
  }

  private scheduleAssess(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.assessNow();
    }, this.debounceMs);
  }

  /** Run one assessment; an older in-flight request is abandoned. */
  async assessNow(): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const ticket = ++this.generation;
    try {
      const report = await this.api.assess(this.answers, controller.signal);
      if (ticket !== this.generation) return; // a newer request finished later
      this.lastReport = report;
      this.stale = false;
      this.error = null;
    } catch (err) {
      if (controller.signal.aborted || ticket !== this.generation) return;
      this.error = err instanceof Error ? err.message : String(err);
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
    this.notify();
  }

  async runWhatIf(overrides: Partial<Answers>): Promise<WhatIfResponse> {
    return this.api.whatif(this.answers, overrides);
  }

  pinScenario(name: string, overrides: Partial<Answers>, result: WhatIfResponse): void {
    this.pinned = [...this.pinned, { name, overrides: { ...overrides }, result }];
    this.notify();
  }

  clearScenarios(): void {
    this.pinned = [];
    this.notify();
  }
}
