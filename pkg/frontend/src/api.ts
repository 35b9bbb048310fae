/** Thin fetch client for the assessment service. */
import type { Answers, ApiError, ModelPayload, Report, WhatIfResponse } from './types.js';

export class ApiRequestError extends Error {
  constructor(
    public status: number,
    public body: ApiError,
  ) {
    super(body.message || `request failed with ${status}`);
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiRequestError(response.status, body as ApiError);
  }
  return body as T;
}

/** The slice of the service the session store depends on. */
export interface AssessmentApi {
  assess(answers: Answers, signal?: AbortSignal): Promise<Report>;
  whatif(
    answers: Answers,
    overrides: Partial<Answers>,
    signal?: AbortSignal,
  ): Promise<WhatIfResponse>;
}

export class ApiClient implements AssessmentApi {
  constructor(private baseUrl: string) {}

  async health(): Promise<boolean> {
    try {
      const response = await fetch(`${this.baseUrl}/health`);
      return response.ok;
    } catch {
      return false;
    }
  }

  async model(): Promise<ModelPayload> {
    return parseOrThrow<ModelPayload>(await fetch(`${this.baseUrl}/model`));
  }

  async assess(answers: Answers, signal?: AbortSignal): Promise<Report> {
    const response = await fetch(`${this.baseUrl}/assess`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ answers }),
      signal,
    });
    return parseOrThrow<Report>(response);
  }

  async whatif(
    answers: Answers,
    overrides: Partial<Answers>,
    signal?: AbortSignal,
  ): Promise<WhatIfResponse> {
    const response = await fetch(`${this.baseUrl}/whatif`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ answers, overrides }),
      signal,
    });
    return parseOrThrow<WhatIfResponse>(response);
  }
}
