/** Bundled case-study questionnaires, handy for demos and verification. */
import type { Answers } from './types.js';

function column(values: number[]): Answers {
  const out = {} as Answers;
  values.forEach((value, index) => {
    out[`q${index + 1}` as keyof Answers] = value;
  });
  return out;
}

export interface Preset {
  id: string;
  title: string;
  answers: Answers;
}

export const PRESETS: Preset[] = [
  {
    id: 'case-1',
    title: 'Case study I (electronics manufacturer)',
    answers: column([35, 40, 25, 35, 25, 40, 10, 5, 50, 45, 30, 10, 15, 20, 30, 35, 7]),
  },
  {
    id: 'case-2',
    title: 'Case study II (communications company)',
    answers: column([40, 40, 15, 30, 50, 15, 15, 30, 50, 40, 50, 40, 40, 30, 40, 45, 25]),
  },
  {
    id: 'case-3',
    title: 'Case study III (global software vendor)',
    answers: column([32.5, 27.5, 30, 37.5, 40, 37.5, 32.5, 30, 35, 37.5, 32.5, 35, 30, 35, 32.5, 30, 37.5]),
  },
  {
    id: 'case-4',
    title: 'Case study IV (e-commerce distributor)',
    answers: column([40, 30, 35, 30, 20, 40, 35, 35, 30, 30, 25, 20, 30, 35, 35, 35, 35]),
  },
];

export function presetById(id: string): Preset | undefined {
  return PRESETS.find((p) => p.id === id);
}
