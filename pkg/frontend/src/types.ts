/** Wire types for the assessment service JSON API. */

export type QuestionId =
  | 'q1' | 'q2' | 'q3' | 'q4' | 'q5' | 'q6' | 'q7' | 'q8' | 'q9'
  | 'q10' | 'q11' | 'q12' | 'q13' | 'q14' | 'q15' | 'q16' | 'q17';

export type Answers = Record<QuestionId, number>;

export type ActivityKey = 'core_asset' | 'product_development' | 'management' | 'overall';

export const ACTIVITY_KEYS: ActivityKey[] = [
  'core_asset',
  'product_development',
  'management',
  'overall',
];

export interface ActivityResult {
  score: number;
  /** Two-decimal display string; rendered verbatim, never recomputed. */
  display: string;
  label: string;
  level: number;
}

export interface TraceEntry {
  section: string;
  node: string;
  left: number;
  right: number;
  score: number;
  display: string;
}

export type Report = Record<ActivityKey, ActivityResult> & { trace: TraceEntry[] };

export interface DeltaEntry {
  score: number;
  display: string;
}

export interface WhatIfResponse {
  base: Report;
  modified: Report;
  deltas: Record<ActivityKey, DeltaEntry>;
}

/** Breakpoint list of one fuzzy term: [x, membership] pairs. */
export type Breakpoints = [number, number][];

export interface TermShape {
  trapezoid: [number, number, number, number];
  breakpoints: Breakpoints;
}

export interface VariablePayload {
  name: string;
  universe: [number, number];
  terms: Record<string, TermShape>;
}

export interface ModelPayload {
  variables: { input: VariablePayload; output: VariablePayload };
  rules: { input_1: string; input_2: string; output: string }[];
  defaultTrees: Record<string, unknown>;
}

export interface ApiError {
  code: string;
  message: string;
  details?: { field: string; message: string }[];
}
