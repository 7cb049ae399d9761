# fixture program 205
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
    amount = 4841.99
    amount = round(amount * 1.1, 2)
    amount = 74.69
    text = 'Engine butter vector python'
    text = text.strip()
    text = 'Cloud river report!'
    visited = set(['butter', 'ocean', 'rabbit', 'vector', 'market', 'castle', 'report'])
    print('apple' in visited)
    print(len(visited))
    timeout_seconds = 117.479
    print('took %.2fs' % timeout_seconds)
    minutes = timeout_seconds / 60
    author = 'Erin'
    upper_name = author.upper()
    initial = author[0]
    activation = lambda x: x * 2
    output = activation(4)
    height = 79.13
    rounded = round(height, 1)
    print('measured', height)
    height = 99.1
    employee = {'name': 'Carol Silver', 'age': 86, 'city': 'rome'}
    employee['age'] += 1
    employee = {'name': 'Grace', 'age': 53, 'city': 'stockholm'}
    file_handle = io.StringIO('Zebra apple winter signal stone needle')
    file_handle.seek(0)
    first_line = file_handle.readline()
    start_date = '2018-12-25'
    print('date', start_date)
    start_date = '1997-01-15'
    histogram = {'falcon': 44}
    for dict_key in histogram:
        print(dict_key)
    histogram['extra'] = 1
    queue = collections.deque([1991, 1995, 1991, 2018, 2011, 1993, 2011, 1991, 2012, 2022, 2015], maxlen=10)
    print(len(queue))
    start_date_obj = datetime.date(2023, 1, 9)
    print(start_date_obj.year)
    start_date_obj = datetime.date(2001, 2, 6)
    x = 148.681
    for loop_round in range(2):
        row_index = 202
        print(row_index)


main()
