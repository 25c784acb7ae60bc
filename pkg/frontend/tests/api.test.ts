import { describe, expect, it } from 'vitest'

import { ApiClient, ApiError, RegistryUnreachable } from '../src/api.js'

type Call = { url: string; init?: RequestInit }

function scriptedFetch(status: number, body: unknown, calls: Call[] = []) {
  const fn = async (input: any, init?: RequestInit): Promise<Response> => {
    calls.push({ url: String(input), init })
    return new Response(JSON.stringify(body), {
      status,
      headers: { 'Content-Type': 'application/json' },
    })
  }
  return { fn, calls }
}

describe('ApiClient', () => {
  it('passes filters as query parameters', async () => {
    const { fn, calls } = scriptedFetch(200, [])
    const client = new ApiClient('http://registry', fn)
    await client.listDatasets({ task: 'Named Entity Recognition', policy: 'BACKUP_REQUIRED' })
    expect(calls[0].url).toBe(
      'http://registry/api/datasets?task=Named+Entity+Recognition&policy=BACKUP_REQUIRED',
    )
  })

  it('sends the bearer token only on mutations', async () => {
    const { fn, calls } = scriptedFetch(201, { id: 'x' })
    const client = new ApiClient('http://registry', fn)
    await client.createDataset({ english_name: 'X' }, 'tok-123')
    const headers = calls[0].init?.headers as Record<string, string>
    expect(headers['Authorization']).toBe('Bearer tok-123')

    const plain = scriptedFetch(200, [])
    await new ApiClient('http://registry', plain.fn).listDatasets()
    const readHeaders = plain.calls[0].init?.headers as Record<string, string>
    expect(readHeaders['Authorization']).toBeUndefined()
  })

  it('surfaces the violation list from a 422', async () => {
    const { fn } = scriptedFetch(422, {
      detail: 'validation failed',
      violations: [{ field: 'english_name', message: 'must be non-empty' }],
    })
    const client = new ApiClient('http://registry', fn)
    const error = await client.createDataset({}, 'tok').catch((e) => e)
    expect(error).toBeInstanceOf(ApiError)
    expect(error.status).toBe(422)
    expect(error.violations).toEqual([{ field: 'english_name', message: 'must be non-empty' }])
  })

  it('maps network failure to RegistryUnreachable', async () => {
    const failing = async () => {
      throw new TypeError('fetch failed')
    }
    const client = new ApiClient('http://nowhere', failing as any)
    await expect(client.listDatasets()).rejects.toBeInstanceOf(RegistryUnreachable)
  })

  it('tolerates non-JSON error bodies', async () => {
    const fn = async (): Promise<Response> =>
      new Response('gateway exploded', { status: 502, statusText: 'Bad Gateway' })
    const client = new ApiClient('http://registry', fn as any)
    const error = await client.listDatasets().catch((e) => e)
    expect(error).toBeInstanceOf(ApiError)
    expect(error.status).toBe(502)
  })
})
