// The application: one render function per page, driven by the URL.
//
// Statelessness contract: every navigation re-fetches from the API, and a
// hard refresh reproduces the same view; mutations never update the DOM
// optimistically.

import { ApiClient, ApiError, RegistryUnreachable, type BrowseFilters } from './api.js'
import { clear, el, option } from './dom.js'
import { queryFromRoute, routeFromQuery, type Route } from './router.js'
import { loadToken, saveToken } from './token.js'
import type { NLPTask, Violation } from './types.js'
import { LINK_KINDS, VARIETIES } from './types.js'
import { toDatasetView, VARIETY_LABELS } from './viewmodel.js'

export class App {
  constructor(
    readonly root: HTMLElement,
    readonly api: ApiClient,
  ) {}

  async start() {
    window.addEventListener('popstate', () => {
      void this.render(routeFromQuery(location.search))
    })
    await this.render(routeFromQuery(location.search))
  }

  async navigate(route: Route) {
    history.pushState(null, '', location.pathname + queryFromRoute(route))
    await this.render(route)
  }

  async render(route: Route) {
    clear(this.root)
    this.root.append(this.header())
    const page = el('main', { class: 'page' })
    this.root.append(page)
    try {
      switch (route.view) {
        case 'browse':
          await this.renderBrowse(page, route.filters)
          break
        case 'detail':
          await this.renderDetail(page, route.datasetId)
          break
        case 'create':
          await this.renderForm(page, null)
          break
        case 'edit':
          await this.renderForm(page, route.datasetId)
          break
        case 'dashboard':
          this.renderDashboard(page)
          break
      }
    } catch (error) {
      clear(page)
      page.append(this.errorBanner(error))
    }
  }

  private header(): HTMLElement {
    const links: [string, Route][] = [
      ['Catalog', { view: 'browse', filters: {} }],
      ['Backup triage', { view: 'browse', filters: { policy: 'BACKUP_REQUIRED' } }],
      ['Add dataset', { view: 'create' }],
      ['Token dashboard', { view: 'dashboard' }],
    ]
    const nav = el('nav', {}, [])
    for (const [label, route] of links) {
      const anchor = el('a', { href: location.pathname + queryFromRoute(route) }, [label])
      anchor.addEventListener('click', (event) => {
        event.preventDefault()
        void this.navigate(route)
      })
      nav.append(anchor)
    }
    return el('header', {}, [el('h1', {}, ['PT resource catalog']), nav])
  }

  private errorBanner(error: unknown): HTMLElement {
    const message =
      error instanceof RegistryUnreachable
        ? `The registry API is unreachable (${error.endpoint}). Nothing shown is current.`
        : error instanceof Error
          ? error.message
          : String(error)
    return el('div', { class: 'banner error', role: 'alert' }, [message])
  }

  // ------------------------------------------------------------------
  // browse

  private async renderBrowse(page: HTMLElement, filters: BrowseFilters) {
    const [datasets, tasks] = await Promise.all([
      this.api.listDatasets(filters),
      this.api.listTasks(),
    ])

    page.append(this.filterBar(filters, tasks))

    if (datasets.length === 0) {
      page.append(
        el('p', { class: 'empty-state' }, [
          'No datasets match the current filters. The catalog view is empty.',
        ]),
      )
      return
    }

    const body = el('tbody')
    for (const dataset of datasets) {
      const view = toDatasetView(dataset, tasks)
      const nameLink = el('a', { href: '#', class: 'dataset-link' }, [dataset.english_name])
      nameLink.addEventListener('click', (event) => {
        event.preventDefault()
        void this.navigate({ view: 'detail', datasetId: dataset.id })
      })
      body.append(
        el('tr', { 'data-dataset-id': dataset.id }, [
          el('td', {}, [nameLink]),
          el('td', {}, [view.taskNames.join(', ')]),
          el('td', {}, view.varietyChips.map((chip) => el('span', { class: 'chip' }, [chip]))),
          el('td', {}, [view.ratingLabel]),
          el('td', {}, [
            el('span', { class: `badge ${view.policyBadge.tone}` }, [view.policyBadge.label]),
          ]),
        ]),
      )
    }
    page.append(
      el('table', { class: 'datasets' }, [
        el('thead', {}, [
          el('tr', {}, [
            el('th', {}, ['Dataset']),
            el('th', {}, ['Tasks']),
            el('th', {}, ['Varieties']),
            el('th', {}, ['Rating']),
            el('th', {}, ['Policy']),
          ]),
        ]),
        body,
      ]),
    )
  }

  private filterBar(filters: BrowseFilters, tasks: NLPTask[]): HTMLElement {
    const taskSelect = el('select', { name: 'task' }, [option('', 'any task', !filters.task)])
    for (const task of tasks) {
      taskSelect.append(option(task.name, task.name, filters.task === task.name))
    }
    const varietySelect = el('select', { name: 'variety' }, [
      option('', 'any variety', !filters.variety),
    ])
    for (const variety of VARIETIES) {
      varietySelect.append(option(variety, VARIETY_LABELS[variety], filters.variety === variety))
    }
    const policySelect = el('select', { name: 'policy' }, [
      option('', 'any policy', !filters.policy),
      option('METADATA_ONLY', 'metadata only', filters.policy === 'METADATA_ONLY'),
      option('BACKUP_REQUIRED', 'backup required', filters.policy === 'BACKUP_REQUIRED'),
    ])

    const apply = () => {
      const next: BrowseFilters = {}
      if (taskSelect.value) next.task = taskSelect.value
      if (varietySelect.value) next.variety = varietySelect.value
      if (policySelect.value) next.policy = policySelect.value
      void this.navigate({ view: 'browse', filters: next })
    }
    for (const select of [taskSelect, varietySelect, policySelect]) {
      select.addEventListener('change', apply)
    }
    return el('div', { class: 'filters' }, [
      el('label', {}, ['Task ', taskSelect]),
      el('label', {}, ['Variety ', varietySelect]),
      el('label', {}, ['Policy ', policySelect]),
    ])
  }

  // ------------------------------------------------------------------
  // detail

  private async renderDetail(page: HTMLElement, datasetId: string) {
    const [dataset, tasks] = await Promise.all([
      this.api.getDataset(datasetId),
      this.api.listTasks(),
    ])
    const view = toDatasetView(dataset, tasks)

    const rows: [string, string][] = [
      ['English name', dataset.english_name],
      ['Native name', dataset.native_name ?? '—'],
      ['Description', dataset.description ?? '—'],
      ['Tasks', view.taskNames.join(', ')],
      ['Varieties', view.varietyChips.join(', ')],
      ['License', dataset.license ?? '—'],
      ['Year', dataset.year === null ? '—' : String(dataset.year)],
    ]
    const table = el('table', { class: 'detail' })
    for (const [label, value] of rows) {
      table.append(el('tr', {}, [el('th', {}, [label]), el('td', {}, [value])]))
    }

    const badges = el('p', { class: 'badges' }, [
      el('span', { class: `badge ${view.policyBadge.tone}` }, [view.policyBadge.label]),
      ' ',
      el('span', { class: 'badge rating-source' }, [view.ratingLabel]),
    ])

    const linkList = el('ul', { class: 'links' })
    for (const link of dataset.links) {
      linkList.append(el('li', {}, [`${link.kind}: ${link.url} [${link.alive ?? 'UNPROBED'}]`]))
    }

    const editButton = el('button', { type: 'button' }, ['Edit'])
    editButton.addEventListener('click', () => {
      void this.navigate({ view: 'edit', datasetId })
    })
    const deleteButton = el('button', { type: 'button', class: 'danger' }, ['Delete'])
    const actionBar = el('div', { class: 'actions' }, [editButton, deleteButton])
    deleteButton.addEventListener('click', async () => {
      try {
        await this.api.deleteDataset(datasetId, loadToken() ?? '')
        await this.navigate({ view: 'browse', filters: {} })
      } catch (error) {
        actionBar.append(this.mutationErrorNotice(error))
      }
    })

    page.append(el('h2', {}, [dataset.english_name]), badges, table, linkList, actionBar)
  }

  // ------------------------------------------------------------------
  // create / edit form

  private async renderForm(page: HTMLElement, datasetId: string | null) {
    const tasks = await this.api.listTasks()
    const existing = datasetId ? await this.api.getDataset(datasetId) : null

    const form = el('form', { class: 'dataset-form', novalidate: 'novalidate' })
    const formErrors = el('div', { class: 'form-errors' })

    const nameInput = el('input', { name: 'english_name', value: existing?.english_name ?? '' })
    const nativeInput = el('input', { name: 'native_name', value: existing?.native_name ?? '' })
    const descriptionInput = el('textarea', { name: 'description' })
    descriptionInput.value = existing?.description ?? ''
    const licenseInput = el('input', { name: 'license', value: existing?.license ?? '' })
    const yearInput = el('input', {
      name: 'year',
      type: 'number',
      value: existing?.year == null ? '' : String(existing.year),
    })

    const taskBoxes: HTMLInputElement[] = []
    const taskField = el('fieldset', { 'data-field': 'task_ids' }, [
      el('legend', {}, ['Tasks']),
      el('div', { class: 'violation-slot' }),
    ])
    for (const task of tasks) {
      const box = el('input', { type: 'checkbox', value: task.id })
      box.checked = existing?.task_ids.includes(task.id) ?? false
      taskBoxes.push(box)
      taskField.append(el('label', { class: 'inline' }, [box, ` ${task.name}`]))
    }

    const varietyBoxes: HTMLInputElement[] = []
    const varietyField = el('fieldset', { 'data-field': 'varieties' }, [
      el('legend', {}, ['Varieties']),
      el('div', { class: 'violation-slot' }),
    ])
    for (const variety of VARIETIES) {
      const box = el('input', { type: 'checkbox', value: variety })
      box.checked = existing?.varieties.includes(variety) ?? false
      varietyBoxes.push(box)
      varietyField.append(el('label', { class: 'inline' }, [box, ` ${VARIETY_LABELS[variety]}`]))
    }

    const linkRows = el('div', { class: 'link-rows' })
    const addLinkRow = (kind = 'HOMEPAGE', url = '') => {
      const kindSelect = el('select', {}, LINK_KINDS.map((k) => option(k, k, k === kind)))
      const urlInput = el('input', { value: url, placeholder: 'https://…' })
      const remove = el('button', { type: 'button' }, ['remove'])
      const row = el('div', { class: 'link-row' }, [kindSelect, urlInput, remove])
      remove.addEventListener('click', () => row.remove())
      linkRows.append(row)
    }
    for (const link of existing?.links ?? []) addLinkRow(link.kind, link.url)
    const addLink = el('button', { type: 'button' }, ['add link'])
    addLink.addEventListener('click', () => addLinkRow())
    const linksField = el('fieldset', { 'data-field': 'links' }, [
      el('legend', {}, ['Links']),
      el('div', { class: 'violation-slot' }),
      linkRows,
      addLink,
    ])

    const fieldRow = (fieldName: string, label: string, control: HTMLElement) =>
      el('div', { class: 'field', 'data-field': fieldName }, [
        el('label', {}, [label, control]),
        el('div', { class: 'violation-slot' }),
      ])

    const submit = el('button', { type: 'submit' }, [existing ? 'Save changes' : 'Create dataset'])
    form.append(
      formErrors,
      fieldRow('english_name', 'English name ', nameInput),
      fieldRow('native_name', 'Native name ', nativeInput),
      fieldRow('description', 'Description ', descriptionInput),
      fieldRow('license', 'License ', licenseInput),
      fieldRow('year', 'Year ', yearInput),
      taskField,
      varietyField,
      linksField,
      submit,
    )

    form.addEventListener('submit', async (event) => {
      event.preventDefault()
      clearViolations(form)

      const payload: Record<string, unknown> = {
        english_name: nameInput.value,
        native_name: nativeInput.value || null,
        description: descriptionInput.value || null,
        task_ids: taskBoxes.filter((b) => b.checked).map((b) => b.value),
        varieties: varietyBoxes.filter((b) => b.checked).map((b) => b.value),
        links: [...linkRows.querySelectorAll('.link-row')].map((row) => ({
          kind: (row.querySelector('select') as HTMLSelectElement).value,
          url: (row.querySelector('input') as HTMLInputElement).value,
        })),
        license: licenseInput.value || null,
        year: yearInput.value === '' ? null : Number(yearInput.value),
      }
      if (existing) {
        // Full-record update: keep the server-held rating and policy.
        payload.id = existing.id
        payload.preservation = existing.preservation
        payload.policy = existing.policy
      }

      try {
        const saved = existing
          ? await this.api.updateDataset(existing.id, payload, loadToken() ?? '')
          : await this.api.createDataset(payload, loadToken() ?? '')
        await this.navigate({ view: 'detail', datasetId: saved.id })
      } catch (error) {
        if (error instanceof ApiError && error.status === 422) {
          showViolations(form, error.violations)
        } else {
          formErrors.append(this.mutationErrorNotice(error))
        }
      }
    })

    page.append(el('h2', {}, [existing ? `Edit ${existing.english_name}` : 'New dataset']), form)
  }

  private mutationErrorNotice(error: unknown): HTMLElement {
    if (error instanceof ApiError && error.status === 401) {
      const link = el('a', { href: '#' }, ['token dashboard'])
      link.addEventListener('click', (event) => {
        event.preventDefault()
        void this.navigate({ view: 'dashboard' })
      })
      return el('div', { class: 'banner error auth' }, [
        'Not authorized. Supply an API token in the ',
        link,
        ' and try again.',
      ])
    }
    if (error instanceof ApiError && error.status === 409) {
      return el('div', { class: 'banner error conflict' }, [
        `Duplicate name: ${error.detail}`,
      ])
    }
    return this.errorBanner(error)
  }

  // ------------------------------------------------------------------
  // token dashboard

  private renderDashboard(page: HTMLElement) {
    const status = el('p', { class: 'token-status' }, [
      loadToken() ? 'A token is stored in this browser.' : 'No token stored yet.',
    ])

    const labelInput = el('input', { name: 'label', placeholder: 'e.g. curator-ana' })
    const secretInput = el('input', { name: 'admin_secret', type: 'password' })
    const outcome = el('div', { class: 'token-outcome' })
    const form = el('form', { class: 'token-form' }, [
      el('label', {}, ['Token label ', labelInput]),
      el('label', {}, ['Admin secret ', secretInput]),
      el('button', { type: 'submit' }, ['Issue token']),
    ])

    form.addEventListener('submit', async (event) => {
      event.preventDefault()
      clear(outcome)
      try {
        const issued = await this.api.issueToken(labelInput.value, secretInput.value)
        saveToken(issued.token)
        const tokenText = el('code', { class: 'issued-token' }, [issued.token])
        const copy = el('button', { type: 'button' }, ['copy'])
        copy.addEventListener('click', () => {
          void navigator.clipboard?.writeText(issued.token)
        })
        outcome.append(
          el('div', { class: 'banner success' }, [
            'Token issued and stored locally. It is shown only once: ',
            tokenText,
            ' ',
            copy,
          ]),
        )
        status.textContent = 'A token is stored in this browser.'
      } catch (error) {
        const message =
          error instanceof ApiError && error.status === 401
            ? 'Wrong admin secret; no token was issued or stored.'
            : error instanceof Error
              ? error.message
              : String(error)
        outcome.append(el('div', { class: 'banner error' }, [message]))
      }
    })

    page.append(el('h2', {}, ['Token dashboard']), status, form, outcome)
  }
}

export function clearViolations(form: HTMLElement) {
  for (const slot of form.querySelectorAll('.violation-slot')) clear(slot as HTMLElement)
  const formLevel = form.querySelector('.form-errors')
  if (formLevel) clear(formLevel as HTMLElement)
}

export function showViolations(form: HTMLElement, violations: Violation[]) {
  const formLevel = form.querySelector('.form-errors')
  for (const violation of violations) {
    const slot = form.querySelector(`[data-field="${violation.field}"] .violation-slot`)
    const message = el('p', { class: 'violation' }, [violation.message])
    if (slot) slot.append(message)
    else formLevel?.append(message)
  }
}
