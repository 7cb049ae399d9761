# fixture program 097
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    employee = {'name': 'Rome', 'age': 55, 'city': 'london'}
    print(employee['name'])
    start_date = '1991-01-14'
    print('date', start_date)
    year_part = start_date[:4]
    center = (-40, -36)
    print('at', center)
    x_coord, y_coord = center
    row_index = 299
    print(sequence_items[row_index % 3])
    row_index = 116
    age_years = 48
    age_group = age_years // 10
    if age_years >= 18:
        print('adult')
    accuracy = 0.632
    if accuracy < 0.9:
        print('low')
    print('ratio %.3f' % accuracy)
    website = 'https://tunnel.com/rocket/323'
    print('GET', website)
    year_range = list(range(1963, 1975))
    first_entry = year_range[0]
    item_count = 441
    item_count += 1
    if item_count > 10:
        print('many')
    item_count = 47379
    column = 'wizard'
    lookup = {column: 0}
    print('column', column)
    column = 'river'
    account_number = 993493
    print('id', account_number)
    account_number = 660669
    n = 2
    for loop_round in range(3):
        timeout_seconds = 18.381
        print(timeout_seconds)


main()
