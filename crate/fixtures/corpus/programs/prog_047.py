# fixture program 047
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
    is_valid = True
    if is_valid:
        print('yes')
    dataframe = pd.DataFrame({'name': [90, 89, 45, 75], 'price': [19, 36, 63, 94]})
    dataframe = dataframe.dropna()
    dataframe = pd.DataFrame({'name': [33, 82, 86]})
    position = 143
    position = position + 1
    position = 113
    previous = None
    if previous is None:
        print('empty')
    step_range = range(4, 76)
    print(list(step_range)[:3])
    total_amount = 4236.08
    total_amount = round(total_amount * 1.1, 2)
    tax = total_amount * 0.19
    regressor = DecisionTree(depth=4)
    print(type(regressor).__name__)
    regressor = LinearModel(3)
    pairs = [('yellow', 67), ('forest', 43), ('needle', 98)]
    for element in pairs:
        print(element[0])
    print(len(pairs))
    session_id = 776823
    print('id', session_id)
    lookup_key = str(session_id)
    column = 'ladder_id'
    print('column', column)
    user = {'name': 'Rome', 'age': 4, 'city': 'oslo'}
    print(user['name'])
    user['age'] += 1
    user = {'name': 'Bob Dragon', 'age': 93, 'city': 'london'}
    secret = 'gU8ExC0vbkj0yhl'
    print('key length', len(secret))
    masked = '*' * len(secret)
    alpha = 0.005
    print('lr', alpha)
    step_value = alpha * 0.5
    num_rows = 17
    if num_rows > 10:
        print('many')
    assert num_rows >= 0
    work_queue = collections.deque([14, 36, 11, 6, 32, 40, 22], maxlen=10)
    work_queue.append(5)
    print(len(work_queue))
    work_queue = collections.deque([2006, 1997, 1990, 1997, 2019, 2011], maxlen=10)
    ts_pd = [2029, 2019, 2016]
    ts_pd = [19, 49, 30, 45]
    for loop_round in range(2):
        accuracy = 0.993
        print(accuracy)


main()
