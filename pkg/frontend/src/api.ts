// Thin fetch wrapper over the registry REST API.
//
// The UI holds no authoritative state: every view re-fetches through this
// client. Error bodies follow the service shape {detail, violations}.

import type { ApiToken, Dataset, NLPTask, Violation } from './types.js'

export interface BrowseFilters {
  task?: string
  variety?: string
  policy?: string
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
    readonly violations: Violation[] = [],
  ) {
    super(`HTTP ${status}: ${detail}`)
  }
}

export class RegistryUnreachable extends Error {
  constructor(readonly endpoint: string) {
    super(`registry unreachable: ${endpoint}`)
  }
}

type FetchLike = typeof fetch

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  async listDatasets(filters: BrowseFilters = {}): Promise<Dataset[]> {
    const params = new URLSearchParams()
    if (filters.task) params.set('task', filters.task)
    if (filters.variety) params.set('variety', filters.variety)
    if (filters.policy) params.set('policy', filters.policy)
    const query = params.toString()
    return this.request('GET', `/api/datasets${query ? `?${query}` : ''}`)
  }

  async getDataset(id: string): Promise<Dataset> {
    return this.request('GET', `/api/datasets/${encodeURIComponent(id)}`)
  }

  async createDataset(payload: object, token: string): Promise<Dataset> {
    return this.request('POST', '/api/datasets', payload, token)
  }

  async updateDataset(id: string, payload: object, token: string): Promise<Dataset> {
    return this.request('PUT', `/api/datasets/${encodeURIComponent(id)}`, payload, token)
  }

  async deleteDataset(id: string, token: string): Promise<void> {
    await this.request('DELETE', `/api/datasets/${encodeURIComponent(id)}`, undefined, token)
  }

  async listTasks(): Promise<NLPTask[]> {
    return this.request('GET', '/api/nlp-tasks')
  }

  async issueToken(label: string, adminSecret: string): Promise<ApiToken> {
    return this.request('POST', '/api/tokens', { label, admin_secret: adminSecret })
  }

  private async request(
    method: string,
    path: string,
    body?: object,
    token?: string,
  ): Promise<any> {
    const headers: Record<string, string> = {}
    if (body !== undefined) headers['Content-Type'] = 'application/json'
    if (token) headers['Authorization'] = `Bearer ${token}`

    let response: Response
    try {
      response = await this.fetchFn(this.baseUrl + path, {
        method,
        headers,
        body: body === undefined ? undefined : JSON.stringify(body),
      })
    } catch {
      throw new RegistryUnreachable(this.baseUrl + path)
    }

    if (!response.ok) {
      let detail = response.statusText
      let violations: Violation[] = []
      try {
        const parsed = await response.json()
        if (typeof parsed.detail === 'string') detail = parsed.detail
        if (Array.isArray(parsed.violations)) violations = parsed.violations
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail, violations)
    }
    if (response.status === 204) return undefined
    return response.json()
  }
}
