// Route and filter state live entirely in the URL query string, so every
// view (including an active filter combination) is a shareable link.

import type { BrowseFilters } from './api.js'

export type Route =
  | { view: 'browse'; filters: BrowseFilters }
  | { view: 'detail'; datasetId: string }
  | { view: 'create' }
  | { view: 'edit'; datasetId: string }
  | { view: 'dashboard' }

export function routeFromQuery(search: string): Route {
  const params = new URLSearchParams(search)
  switch (params.get('view')) {
    case 'detail': {
      const datasetId = params.get('dataset') ?? ''
      return datasetId ? { view: 'detail', datasetId } : browseRoute(params)
    }
    case 'create':
      return { view: 'create' }
    case 'edit': {
      const datasetId = params.get('dataset') ?? ''
      return datasetId ? { view: 'edit', datasetId } : browseRoute(params)
    }
    case 'dashboard':
      return { view: 'dashboard' }
    default:
      return browseRoute(params)
  }
}

function browseRoute(params: URLSearchParams): Route {
  const filters: BrowseFilters = {}
  const task = params.get('task')
  const variety = params.get('variety')
  const policy = params.get('policy')
  if (task) filters.task = task
  if (variety) filters.variety = variety
  if (policy) filters.policy = policy
  return { view: 'browse', filters }
}

export function queryFromRoute(route: Route): string {
  const params = new URLSearchParams()
  switch (route.view) {
    case 'browse':
      if (route.filters.task) params.set('task', route.filters.task)
      if (route.filters.variety) params.set('variety', route.filters.variety)
      if (route.filters.policy) params.set('policy', route.filters.policy)
      break
    case 'detail':
    case 'edit':
      params.set('view', route.view)
      params.set('dataset', route.datasetId)
      break
    case 'create':
    case 'dashboard':
      params.set('view', route.view)
      break
  }
  const query = params.toString()
  return query ? `?${query}` : ''
}
