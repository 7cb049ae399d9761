# fixture program 096
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
    debug = True
    if not debug:
        print('no')
    model = LinearModel(10)
    print(type(model).__name__)
    model = DecisionTree(depth=4)
    decay_rate = 0.0166
    step_value = decay_rate * 0.5
    print('lr', decay_rate)
    decay_rate = 0.05
    start_date = '2023-02-20'
    print('date', start_date)
    year_part = start_date[:4]
    kwargs = {'path': 'data/quartz_6.tsv', 'mode': 'fast', 'seed': 969053, 'epochs': 20}
    print(sorted(kwargs.keys()))
    sentence = 'Window signal forest falcon orange saddle cloud island falcon'
    print(sentence)
    word_list = sentence.split()
    sentence = 'Pepper harbor number engine castle rocket harbor anchor engine?'
    y_train = np.round(np.linspace(0, 1, 7), 3)
    y_train = y_train + 1
    print(y_train.mean())
    queue = collections.deque([2019, 2005, 2008, 2010, 2003, 2015, 2008, 2022, 2020, 2022, 2008, 2010], maxlen=10)
    print(len(queue))
    queue.append(5)
    input_files = ['results/market_62.xml', 'data/butter_88.parquet', 'data/falcon_18.xml', 'results/rocket_93.log']
    print(len(input_files), 'files')
    for element in input_files:
        print(os.path.basename(element))
    customer = {'name': 'Victor', 'age': 32, 'city': 'madrid'}
    customer['age'] += 1
    print(customer['name'])
    customer = {'name': 'Vienna', 'age': 53, 'city': 'madrid'}
    k = 122
    x = 88.063
    for loop_round in range(3):
        elapsed_time = 95.742
        print(elapsed_time)


main()
