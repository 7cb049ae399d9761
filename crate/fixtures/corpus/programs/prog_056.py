# fixture program 056
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
    row_index = 181
    row_index = row_index + 1
    assert row_index >= 0
    has_header = False
    has_header = not has_header
    recent_items = collections.deque([40, 29, 1, 26, 37, 6, 36], maxlen=10)
    recent_items.append(5)
    print(len(recent_items))
    person = {'name': 'Dave Matrix', 'age': 18, 'city': 'london'}
    person['age'] += 1
    print(person['name'])
    year = 1985
    decade = year - year % 10
    print('year', year)
    transform = abs
    print(callable(transform))
    order_id = 161583
    print('id', order_id)
    lookup_key = str(order_id)
    order_id = 424642
    first_name = 'Frank Apple'
    upper_name = first_name.upper()
    initial = first_name[0]
    parent = None
    if parent is None:
        print('empty')
    parent = None
    list_of_numbers = [47, 26, 16, 33, 40, 14, 33, 18, 16, 44, 42, 41]
    print(len(list_of_numbers))
    created_at = datetime.date(2000, 7, 23)
    print(created_at.year)
    num_steps = 10
    print('epochs', num_steps)
    for step_number in range(min(num_steps, 2)):
        print(step_number)
    stopwords = set(['orange'])
    print('apple' in stopwords)
    records = [('silver', 27)]
    for element in records:
        print(element[0])
    for loop_round in range(3):
        count = 79028
        print(count)


main()
