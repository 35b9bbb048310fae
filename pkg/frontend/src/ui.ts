/** DOM rendering: questionnaire sliders, live gauges, what-if panel. */
import { badgeText, bandGradient, membershipAt } from './membership.js';
import { PRESETS, presetById } from './presets.js';
import { CATEGORY_TITLES, questionsIn } from './questions.js';
import { gaugeViews, SessionStore } from './state.js';
import type { Category } from './questions.js';
import type { Answers, ModelPayload, Report, WhatIfResponse } from './types.js';
import { ACTIVITY_KEYS } from './types.js';

const ACTIVITY_TITLES: Record<string, string> = {
  core_asset: 'Core Asset Development',
  product_development: 'Product Development',
  management: 'Management',
  overall: 'Overall Process',
};

const INPUT_COLORS: Record<string, string> = {
  No: '#f4c7c3',
  Partial: '#fce8b2',
  Yes: '#c8e6c9',
};

const OUTPUT_COLORS: Record<string, string> = {
  'Very Low': '#f4c7c3',
  Low: '#fad2a5',
  Medium: '#fce8b2',
  High: '#c8e6c9',
  'Very High': '#a5d6a7',
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export class App {
  private root: HTMLElement;
  private badges = new Map<string, HTMLElement>();
  private sliders = new Map<string, HTMLInputElement>();
  private values = new Map<string, HTMLElement>();
  private gaugeHost!: HTMLElement;
  private whatifHost!: HTMLElement;
  private errorBanner!: HTMLElement;
  private overrides: Partial<Answers> = {};
  private lastWhatIf: WhatIfResponse | null = null;

  constructor(
    root: HTMLElement,
    private store: SessionStore,
    private model: ModelPayload,
  ) {
    this.root = root;
    store.subscribe(() => this.refresh());
  }

  render(): void {
    this.root.innerHTML = '';
    this.errorBanner = el('div', 'error-banner hidden');
    this.root.appendChild(this.errorBanner);
    this.root.appendChild(this.renderPresetBar());

    const layout = el('div', 'layout');
    layout.appendChild(this.renderQuestionnaire());
    const right = el('div', 'right-column');
    this.gaugeHost = el('section', 'gauges');
    right.appendChild(this.gaugeHost);
    this.whatifHost = el('section', 'whatif');
    right.appendChild(this.whatifHost);
    layout.appendChild(right);
    this.root.appendChild(layout);

    this.renderWhatIfPanel();
    this.refresh();
  }

  private renderPresetBar(): HTMLElement {
    const bar = el('div', 'preset-bar');
    bar.appendChild(el('span', 'preset-label', 'Presets:'));
    const select = el('select');
    select.appendChild(new Option('choose a case study...', ''));
    for (const preset of PRESETS) select.appendChild(new Option(preset.title, preset.id));
    select.addEventListener('change', () => {
      const preset = presetById(select.value);
      if (preset) this.applyAnswers(preset.answers);
    });
    bar.appendChild(select);
    return bar;
  }

  private applyAnswers(answers: Answers): void {
    this.store.loadAnswers(answers);
    for (const [id, slider] of this.sliders) {
      slider.value = String(answers[id as keyof Answers]);
    }
    this.syncSliderDecorations();
  }

  private renderQuestionnaire(): HTMLElement {
    const form = el('section', 'questionnaire');
    const gradient = bandGradient(this.model.variables.input, INPUT_COLORS);
    for (const category of Object.keys(CATEGORY_TITLES) as Category[]) {
      const group = el('fieldset', 'category');
      group.appendChild(el('legend', undefined, CATEGORY_TITLES[category]));
      for (const question of questionsIn(category)) {
        const row = el('div', 'question-row');
        row.appendChild(el('label', 'question-text', `${question.id}. ${question.text}`));

        const controls = el('div', 'slider-wrap');
        const slider = el('input') as HTMLInputElement;
        slider.type = 'range';
        slider.min = '0';
        slider.max = '50';
        slider.step = '0.5';
        slider.value = String(this.store.answers[question.id]);
        slider.style.background = gradient;
        slider.addEventListener('input', () => {
          this.store.setAnswer(question.id, Number(slider.value));
          this.syncSliderDecorations();
        });
        controls.appendChild(slider);

        const value = el('span', 'slider-value');
        const badge = el('span', 'badge');
        controls.appendChild(value);
        controls.appendChild(badge);
        row.appendChild(controls);
        group.appendChild(row);

        this.sliders.set(question.id, slider);
        this.values.set(question.id, value);
        this.badges.set(question.id, badge);
      }
      form.appendChild(group);
    }
    this.syncSliderDecorations();
    return form;
  }

  private syncSliderDecorations(): void {
    for (const [id, slider] of this.sliders) {
      const x = Number(slider.value);
      this.values.get(id)!.textContent = x.toFixed(1);
      this.badges.get(id)!.textContent = badgeText(this.model.variables.input, x);
    }
  }

  private gaugeCard(report: Report, key: (typeof ACTIVITY_KEYS)[number]): HTMLElement {
    const entry = report[key];
    const card = el('div', 'gauge-card');
    card.appendChild(el('h3', undefined, ACTIVITY_TITLES[key]));
    const bar = el('div', 'gauge-bar');
    bar.style.background = bandGradient(this.model.variables.output, OUTPUT_COLORS);
    const needle = el('div', 'gauge-needle');
    const [lo, hi] = this.model.variables.output.universe;
    needle.style.left = `${((entry.score - lo) / (hi - lo)) * 100}%`;
    bar.appendChild(needle);
    card.appendChild(bar);
    card.appendChild(el('div', 'gauge-score', entry.display));
    card.appendChild(el('div', 'gauge-label', `${entry.label} (level ${entry.level})`));
    return card;
  }

  private refresh(): void {
    if (this.store.error) {
      this.errorBanner.textContent = `service error: ${this.store.error}`;
      this.errorBanner.classList.remove('hidden');
    } else {
      this.errorBanner.classList.add('hidden');
    }
    this.gaugeHost.innerHTML = '';
    this.gaugeHost.classList.toggle('stale', this.store.stale);
    const report = this.store.lastReport;
    if (!report) {
      this.gaugeHost.appendChild(el('p', 'placeholder', 'Move a slider to assess.'));
      return;
    }
    for (const view of gaugeViews(report)) {
      this.gaugeHost.appendChild(this.gaugeCard(report, view.key));
    }
  }

  // --- what-if ------------------------------------------------------------

  private renderWhatIfPanel(): void {
    const host = this.whatifHost;
    host.innerHTML = '';
    host.appendChild(el('h2', undefined, 'What-if scenarios'));

    const editor = el('div', 'override-editor');
    const select = el('select');
    for (const [id] of this.sliders) select.appendChild(new Option(id, id));
    const input = el('input') as HTMLInputElement;
    input.type = 'number';
    input.min = '0';
    input.max = '50';
    input.step = '0.5';
    input.value = '40';
    const add = el('button', undefined, 'set override');
    add.addEventListener('click', () => {
      const value = Math.min(50, Math.max(0, Number(input.value)));
      this.overrides = { ...this.overrides, [select.value]: value };
      this.renderOverrideList(host);
    });
    editor.appendChild(select);
    editor.appendChild(input);
    editor.appendChild(add);
    host.appendChild(editor);

    host.appendChild(el('div', 'override-list'));
    const actions = el('div', 'whatif-actions');
    const run = el('button', undefined, 'run scenario');
    run.addEventListener('click', () => void this.runScenario());
    const pin = el('button', undefined, 'pin result');
    pin.addEventListener('click', () => this.pinScenario());
    const clear = el('button', undefined, 'clear pinned');
    clear.addEventListener('click', () => {
      this.store.clearScenarios();
      this.renderPinned();
    });
    actions.appendChild(run);
    actions.appendChild(pin);
    actions.appendChild(clear);
    host.appendChild(actions);
    host.appendChild(el('div', 'whatif-result'));
    host.appendChild(el('div', 'pinned-list'));
    this.renderOverrideList(host);
  }

  private renderOverrideList(host: HTMLElement): void {
    const list = host.querySelector('.override-list')!;
    list.innerHTML = '';
    const entries = Object.entries(this.overrides);
    list.appendChild(
      el('p', 'override-summary',
        entries.length
          ? entries.map(([k, v]) => `${k} -> ${v}`).join(', ')
          : 'no overrides: deltas will be zero'),
    );
  }

  private async runScenario(): Promise<void> {
    const resultHost = this.whatifHost.querySelector('.whatif-result')!;
    resultHost.innerHTML = '';
    try {
      this.lastWhatIf = await this.store.runWhatIf(this.overrides);
    } catch (err) {
      resultHost.appendChild(
        el('p', 'error-banner', err instanceof Error ? err.message : String(err)),
      );
      return;
    }
    resultHost.appendChild(this.comparisonTable(this.lastWhatIf));
  }

  private comparisonTable(result: WhatIfResponse): HTMLElement {
    const table = el('table', 'comparison');
    const head = el('tr');
    for (const title of ['Activity', 'Base', 'Scenario', 'Delta']) {
      head.appendChild(el('th', undefined, title));
    }
    table.appendChild(head);
    for (const key of ACTIVITY_KEYS) {
      const row = el('tr');
      row.appendChild(el('td', undefined, ACTIVITY_TITLES[key]));
      row.appendChild(el('td', undefined, result.base[key].display));
      row.appendChild(el('td', undefined, result.modified[key].display));
      const delta = result.deltas[key];
      const cell = el('td', undefined, delta.display);
      cell.className = delta.score > 0 ? 'delta-up' : delta.score < 0 ? 'delta-down' : '';
      row.appendChild(cell);
      table.appendChild(row);
    }
    return table;
  }

  private pinScenario(): void {
    if (!this.lastWhatIf) return;
    const name = `scenario ${this.store.pinned.length + 1}`;
    this.store.pinScenario(name, this.overrides, this.lastWhatIf);
    this.renderPinned();
  }

  private renderPinned(): void {
    const list = this.whatifHost.querySelector('.pinned-list')!;
    list.innerHTML = '';
    for (const scenario of this.store.pinned) {
      const card = el('div', 'pinned-card');
      card.appendChild(el('h4', undefined, scenario.name));
      card.appendChild(
        el('p', 'override-summary',
          Object.entries(scenario.overrides).map(([k, v]) => `${k} -> ${v}`).join(', ') || 'no overrides'),
      );
      card.appendChild(this.comparisonTable(scenario.result));
      list.appendChild(card);
    }
  }
}

export function membershipPreview(model: ModelPayload, x: number): string {
  // used by the header tooltip; badge logic shared with the sliders
  return badgeText(model.variables.input, x) || `no coverage at ${x}`;
}

export function outputBandAt(model: ModelPayload, score: number): string {
  const terms = Object.entries(model.variables.output.terms)
    .map(([term, shape]) => ({ term, degree: membershipAt(shape.breakpoints, score) }))
    .filter((t) => t.degree > 0)
    .map((t) => t.term);
  return terms.join(' to ');
}
