/**
 * Client for the decision service. Every JSON response goes through the
 * raw-number-preserving parser, so view code receives numbers exactly as
 * the service printed them.
 */

import {
  RawValue,
  asArray,
  asString,
  field,
  optionalField,
  rawParse,
} from './rawJson.js';

export interface JudgmentEntryBody {
  row: string;
  col: string;
  grade: string;
  inverted?: boolean;
}

export interface MissingJudgment {
  decision_maker_id: string;
  context_id: string;
}

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly kind: string,
    detail: string,
    readonly missing: MissingJudgment[] = [],
  ) {
    super(detail);
    this.name = 'ServiceError';
  }
}

export interface ConsoleClientOptions {
  baseUrl: string;
  token: string;
  /** injectable for tests; defaults to the global fetch */
  fetchFn?: typeof fetch;
}

function errorFromBody(status: number, text: string): ServiceError {
  let kind = 'HttpError';
  let detail = text || `HTTP ${status}`;
  const missing: MissingJudgment[] = [];
  try {
    const body = rawParse(text);
    const kindField = optionalField(body, 'error');
    if (kindField !== undefined) kind = asString(kindField, 'error');
    const detailField = optionalField(body, 'detail');
    if (detailField !== undefined) detail = asString(detailField, 'detail');
    const missingField = optionalField(body, 'missing');
    if (missingField !== undefined) {
      for (const entry of asArray(missingField, 'missing')) {
        missing.push({
          decision_maker_id: asString(field(entry, 'decision_maker_id')),
          context_id: asString(field(entry, 'context_id')),
        });
      }
    }
  } catch {
    // non-JSON error body; keep the raw text as the detail
  }
  return new ServiceError(status, kind, detail, missing);
}

export class ConsoleClient {
  private readonly baseUrl: string;
  private readonly token: string;
  private readonly fetchFn: typeof fetch;

  constructor(options: ConsoleClientOptions) {
    this.baseUrl = options.baseUrl.replace(/\/+$/, '');
    this.token = options.token;
    this.fetchFn = options.fetchFn ?? globalThis.fetch.bind(globalThis);
  }

  private async request(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<string> {
    const headers: Record<string, string> = {
      Authorization: `Bearer ${this.token}`,
    };
    let payload: string | undefined;
    if (body !== undefined) {
      headers['Content-Type'] = 'application/json';
      payload = JSON.stringify(body);
    }
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers,
      body: payload,
    });
    const text = await response.text();
    if (!response.ok) throw errorFromBody(response.status, text);
    return text;
  }

  private async json(method: string, path: string, body?: unknown): Promise<RawValue> {
    return rawParse(await this.request(method, path, body));
  }

  health(): Promise<RawValue> {
    return this.json('GET', '/health');
  }

  projects(): Promise<RawValue> {
    return this.json('GET', '/projects');
  }

  project(projectId: string): Promise<RawValue> {
    return this.json('GET', `/projects/${encodeURIComponent(projectId)}`);
  }

  contexts(projectId: string): Promise<RawValue> {
    return this.json('GET', `/projects/${encodeURIComponent(projectId)}/contexts`);
  }

  submitJudgment(
    projectId: string,
    decisionMakerId: string,
    contextId: string,
    entries: JudgmentEntryBody[],
  ): Promise<RawValue> {
    const path =
      `/projects/${encodeURIComponent(projectId)}` +
      `/judgments/${encodeURIComponent(decisionMakerId)}/${encodeURIComponent(contextId)}`;
    return this.json('PUT', path, { entries });
  }

  judgments(projectId: string, decisionMakerId: string): Promise<RawValue> {
    const path =
      `/projects/${encodeURIComponent(projectId)}` +
      `/judgments/${encodeURIComponent(decisionMakerId)}`;
    return this.json('GET', path);
  }

  consistency(projectId: string): Promise<RawValue> {
    return this.json('GET', `/projects/${encodeURIComponent(projectId)}/consistency`);
  }

  reviewConsistency(projectId: string): Promise<RawValue> {
    return this.json('POST', `/projects/${encodeURIComponent(projectId)}/consistency/review`);
  }

  returnForRevision(projectId: string): Promise<RawValue> {
    return this.json('POST', `/projects/${encodeURIComponent(projectId)}/consistency/return`);
  }

  runEvaluation(projectId: string): Promise<RawValue> {
    return this.json('POST', `/projects/${encodeURIComponent(projectId)}/evaluation/run`);
  }

  applyScreening(projectId: string): Promise<RawValue> {
    return this.json('POST', `/projects/${encodeURIComponent(projectId)}/screening/apply`);
  }

  openFinancial(projectId: string): Promise<RawValue> {
    return this.json('POST', `/projects/${encodeURIComponent(projectId)}/financial/open`);
  }

  award(projectId: string): Promise<RawValue> {
    return this.json('GET', `/projects/${encodeURIComponent(projectId)}/award`);
  }

  textReport(
    projectId: string,
    kind: 'consistency' | 'ranking' | 'financial',
  ): Promise<string> {
    return this.request('GET', `/projects/${encodeURIComponent(projectId)}/reports/${kind}`);
  }
}
